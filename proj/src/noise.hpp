#pragma once

#include <cstdint>

#include "image.hpp"

namespace latif {

struct NoiseSpec {
    double sigma = 13.0;
    uint64_t seed = 0;
    bool clip = true;  // clamp to [0,255] after adding noise
};

// Deterministic 64-bit generator (splitmix64). The exact algorithm is
// fixed so streams reproduce across platforms and languages:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
//   z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next();
    /// Uniform double in (0, 1]: ((next() >> 11) + 1) * 2^-53.
    double next_unit();

private:
    uint64_t state_;
};

// Standard normal stream via the Box-Muller transform. Each pair of
// uniforms (u1, u2) yields r*cos(2*pi*u2) then r*sin(2*pi*u2) with
// r = sqrt(-2 ln u1); values are consumed in that order.
class NormalStream {
public:
    explicit NormalStream(uint64_t seed) : rng_(seed) {}
    double next();

private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Adds i.i.d. N(0, sigma^2) noise pixel by pixel in row-major order from
/// a fresh seeded stream, optionally clamping to [0,255].
Image add_gaussian_noise(const Image& img, const NoiseSpec& spec);

}  // namespace latif
