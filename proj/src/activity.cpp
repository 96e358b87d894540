#include "activity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latif {

void validate_activity_config(const ActivityConfig& cfg) {
    if (!(cfg.clip_high > 0.5))
        throw std::invalid_argument("activity: clip_high must exceed 1/2");
    if (cfg.max_iterations < 1)
        throw std::invalid_argument("activity: max_iterations must be positive");
    if (cfg.update_interval < 1 || cfg.update_interval > cfg.max_iterations)
        throw std::invalid_argument("activity: update_interval must lie in [1, max_iterations]");
}

std::pair<Image, Image> local_mean_std(const Image& img) {
    Image mean(img.height, img.width);
    Image stddev(img.height, img.width);
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            double sum = 0.0;
            for (int dr = -1; dr <= 1; ++dr)
                for (int dc = -1; dc <= 1; ++dc)
                    sum += sample_clamped(img, r + dr, c + dc);
            const double m = sum / 9.0;
            double sq = 0.0;
            for (int dr = -1; dr <= 1; ++dr)
                for (int dc = -1; dc <= 1; ++dc) {
                    const double d = sample_clamped(img, r + dr, c + dc) - m;
                    sq += d * d;
                }
            mean.at(r, c) = m;
            stddev.at(r, c) = std::sqrt(sq / 9.0);
        }
    }
    return {std::move(mean), std::move(stddev)};
}

Image clip_activity(const Image& std_map, double clip_high) {
    if (!(clip_high > 0.5))
        throw std::invalid_argument("clip_activity: clip_high must exceed 1/2");
    Image out = std_map;
    for (double& v : out.data) {
        if (v < 0.5)
            v = 0.5;
        else if (v >= clip_high)
            v = clip_high;
    }
    return out;
}

Image normalize_activity(const Image& clipped) {
    const double mx = *std::max_element(clipped.data.begin(), clipped.data.end());
    if (!(mx > 0.0))
        throw std::invalid_argument("normalize_activity: maximum must be positive");
    Image out = clipped;
    for (double& v : out.data) v /= mx;
    return out;
}

ActivityMap compute_activity(const Image& img, double clip_high) {
    ActivityMap map;
    map.raw_std = local_mean_std(img).second;
    map.clipped = clip_activity(map.raw_std, clip_high);
    map.normalized = normalize_activity(map.clipped);
    map.tuned = map.normalized;
    return map;
}

Image normalized_activity(const Image& img, double clip_high) {
    return normalize_activity(clip_activity(local_mean_std(img).second, clip_high));
}

Image scheduled_activity(int t, const ActivityConfig& cfg,
                         const std::function<Image()>& recompute,
                         std::optional<Image>& cache) {
    if (t < 0) throw std::invalid_argument("scheduled_activity: iteration must be non-negative");
    if (t % cfg.update_interval == 0) {
        cache = recompute();
        return *cache;
    }
    if (!cache.has_value())
        throw std::logic_error("scheduled_activity: cache missing between updates");
    return *cache;
}

}  // namespace latif
