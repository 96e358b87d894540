#include "noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace latif {

uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

double NormalStream::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = rng_.next_unit();
    const double u2 = rng_.next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

Image add_gaussian_noise(const Image& img, const NoiseSpec& spec) {
    validate_image(img);
    if (!(spec.sigma >= 0.0))
        throw std::invalid_argument("add_gaussian_noise: sigma must be non-negative");
    if (spec.sigma == 0.0) return img;

    NormalStream stream(spec.seed);
    Image out = img;
    for (double& v : out.data) {
        v += spec.sigma * stream.next();
        if (spec.clip) v = std::clamp(v, 0.0, 255.0);
    }
    return out;
}

}  // namespace latif
