// Shared synthetic fixtures for unit and acceptance tests.
#pragma once

#include <cmath>

#include "image.hpp"
#include "noise.hpp"
#include "synth.hpp"

namespace fixtures {

// Step of height 100 at column width/2 with four alternating +/-4 "ringing"
// bands hugging each side of the edge, mimicking a compressed piece-wise
// smooth image. Clean reference is the same step without the bands.
inline latif::Image ringing_step(int height, int width) {
    latif::Image img(height, width, 0.0);
    const int edge = width / 2;
    for (int r = 0; r < height; ++r)
        for (int c = edge; c < width; ++c) img.at(r, c) = 100.0;
    for (int r = 0; r < height; ++r) {
        for (int d = 0; d < 4; ++d) {
            const double ripple = (d % 2 == 0) ? 4.0 : -4.0;
            img.at(r, edge - 1 - d) += ripple;   // left plateau side
            img.at(r, edge + d) -= ripple;       // right plateau side
        }
    }
    return img;
}

inline latif::Image clean_step_100(int height, int width) {
    latif::Image img(height, width, 0.0);
    for (int r = 0; r < height; ++r)
        for (int c = width / 2; c < width; ++c) img.at(r, c) = 100.0;
    return img;
}

// Max absolute deviation from the clean step over the ringing bands.
inline double ringing_amplitude(const latif::Image& img) {
    const int edge = img.width / 2;
    double amp = 0.0;
    for (int r = 0; r < img.height; ++r)
        for (int d = 0; d < 4; ++d) {
            amp = std::max(amp, std::fabs(img.at(r, edge - 1 - d) - 0.0));
            amp = std::max(amp, std::fabs(img.at(r, edge + d) - 100.0));
        }
    return amp;
}

// Mean over the flat plateaus outside the ringing bands; side < 0 selects
// the 0-plateau, side > 0 the 100-plateau.
inline double plateau_mean(const latif::Image& img, int side) {
    const int edge = img.width / 2;
    double sum = 0.0;
    int count = 0;
    for (int r = 0; r < img.height; ++r) {
        if (side < 0) {
            for (int c = 0; c < edge - 4; ++c) {
                sum += img.at(r, c);
                ++count;
            }
        } else {
            for (int c = edge + 4; c < img.width; ++c) {
                sum += img.at(r, c);
                ++count;
            }
        }
    }
    return sum / count;
}

// Piece-wise structure plus weak seeded texture: the smoothing-test fixture.
inline latif::Image noisy_texture(int height, int width, uint64_t seed) {
    latif::Image base(height, width, 64.0);
    for (int r = 0; r < height; ++r)
        for (int c = width / 2; c < width; ++c) base.at(r, c) = 192.0;
    latif::NoiseSpec spec;
    spec.sigma = 2.0;
    spec.seed = seed;
    spec.clip = false;
    return latif::add_gaussian_noise(base, spec);
}

}  // namespace fixtures
