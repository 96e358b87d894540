#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "image.hpp"

namespace latif {

struct ActivityConfig {
    double clip_high = 30.0;  // h, intensity units; must exceed 1/2
    int update_interval = 5;  // l
    int max_iterations = 11;  // m
};

void validate_activity_config(const ActivityConfig& cfg);

// Per-pixel local activity stages: 3x3 standard deviation, its clip to
// [1/2, h], the global-max normalization, and the schedule-selected map
// that tunes the filters.
struct ActivityMap {
    Image raw_std;
    Image clipped;
    Image normalized;
    Image tuned;
};

/// 3x3 window mean and population standard deviation (divide-by-9), with
/// replicate padding so border pixels still see nine samples.
std::pair<Image, Image> local_mean_std(const Image& img);

/// Piecewise clip: values below 1/2 become 1/2, values at or above h
/// become h. Requires h > 1/2.
Image clip_activity(const Image& std_map, double clip_high);

/// Divide by the global maximum; the result lies in (0, 1] and attains 1.
Image normalize_activity(const Image& clipped);

/// Full pipeline raw std -> clip -> normalize for one image.
ActivityMap compute_activity(const Image& img, double clip_high);

/// Shortcut: the normalized map only.
Image normalized_activity(const Image& img, double clip_high);

/// Interval schedule: at iterations where mod(t, l) == 0 the map is
/// recomputed (and cached); in between the cached map from iteration
/// t - mod(t, l) is reused. The cache is owned by the calling loop.
Image scheduled_activity(int t, const ActivityConfig& cfg,
                         const std::function<Image()>& recompute,
                         std::optional<Image>& cache);

}  // namespace latif
