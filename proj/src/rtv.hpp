#pragma once

#include "activity.hpp"
#include "image.hpp"
#include "solver.hpp"

namespace latif {

enum class RtvMode {
    rtv,       // plain relative-total-variation penalty
    lat_rtv,   // penalty divided by the local activity (smoothing)
    lat_rtvd,  // penalty multiplied by the local activity (denoising)
};

enum class RtvFidelity {
    previous_iterate,  // each solve anchors to the previous iterate
    original_image,    // each solve anchors to the input image
};

enum class RtvSolverChoice { pcg, dense };

struct RtvConfig {
    double lambda = 0.01;   // smoothing weight
    double sigma = 3.0;     // Gaussian window scale, pixels
    double eps = 1e-3;      // stabilizer flooring every denominator
    int iterations = 4;
    RtvMode mode = RtvMode::lat_rtv;
    RtvFidelity fidelity = RtvFidelity::previous_iterate;
    double clip_high = 30.0;  // activity clip bound for the lat modes
    RtvSolverChoice solver = RtvSolverChoice::pcg;
};

void validate_rtv_config(const RtvConfig& cfg);

// Per-pixel diagonal weights of the linearized quadratic penalty.
// q is the activity factor: 1/v for lat_rtv, v for lat_rtvd, 1 for rtv.
struct RtvWeights {
    Image s_x;
    Image s_y;
    Image q;
};

/// Unnormalized Gaussian window exp(-(dx^2+dy^2)/(2 sigma^2)) sampled on a
/// square of half-width ceil(3 sigma).
Image gaussian_window(double sigma);

/// Windowed total variation D (Gaussian-weighted sum of |gradient|) and
/// windowed inherent variation L (|Gaussian-weighted gradient sum|), per
/// axis, with gradients outside the image treated as zero.
struct WindowedVariations {
    Image d_x, d_y, l_x, l_y;
};
WindowedVariations windowed_variations(const Image& img, double sigma);

/// s_x(q) = [Gaussian blur of 1/(L_x + eps)](q) / (|dx I|(q) + eps), same
/// for y; the activity factor is computed from `img` unless
/// `activity_override` supplies a replacement map (test hook).
RtvWeights decomposition_weights(const Image& img, const RtvConfig& cfg,
                                 const Image* activity_override = nullptr);

/// A = E + lambda (Gx^T Sx Q Gx + Gy^T Sy Q Gy) as a five-point stencil,
/// with the right-hand side chosen by cfg.fidelity.
SparseSystem assemble_system(const Image& prev, const Image& original, const RtvWeights& weights,
                             const RtvConfig& cfg);

/// Iterated linearized solve: recompute weights from the current iterate,
/// assemble, solve, repeat cfg.iterations times.
Image rtv_filter(const Image& img, const RtvConfig& cfg);

/// Same loop with a fixed activity map substituted for every iteration.
Image rtv_filter_with_activity(const Image& img, const RtvConfig& cfg,
                               const Image& activity_override);

}  // namespace latif
