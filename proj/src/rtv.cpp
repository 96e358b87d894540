#include "rtv.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "errors.hpp"

namespace latif {

void validate_rtv_config(const RtvConfig& cfg) {
    if (!(cfg.lambda >= 0.0)) throw std::invalid_argument("rtv: lambda must be non-negative");
    if (!(cfg.sigma > 0.0)) throw std::invalid_argument("rtv: sigma must be positive");
    if (!(cfg.eps > 0.0)) throw std::invalid_argument("rtv: eps must be positive");
    if (cfg.iterations < 0) throw std::invalid_argument("rtv: iterations must be non-negative");
    if (cfg.mode != RtvMode::rtv && !(cfg.clip_high > 0.5))
        throw std::invalid_argument("rtv: clip_high must exceed 1/2");
}

namespace {

int window_radius(double sigma) { return static_cast<int>(std::ceil(3.0 * sigma)); }

std::vector<double> gaussian_kernel_1d(double sigma) {
    const int radius = window_radius(sigma);
    std::vector<double> k(2 * radius + 1);
    for (int i = -radius; i <= radius; ++i)
        k[i + radius] = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
    return k;
}

// Windowed sum with the unnormalized Gaussian, truncated at the image
// border (samples outside contribute zero). Separable passes keep the
// summation order fixed, so results are bit-stable.
Image blur_truncated(const Image& img, double sigma) {
    const std::vector<double> k = gaussian_kernel_1d(sigma);
    const int radius = window_radius(sigma);
    Image rows(img.height, img.width);
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            double s = 0.0;
            for (int d = -radius; d <= radius; ++d) {
                const int cc = c + d;
                if (cc >= 0 && cc < img.width) s += k[d + radius] * img.at(r, cc);
            }
            rows.at(r, c) = s;
        }
    }
    Image out(img.height, img.width);
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            double s = 0.0;
            for (int d = -radius; d <= radius; ++d) {
                const int rr = r + d;
                if (rr >= 0 && rr < img.height) s += k[d + radius] * rows.at(rr, c);
            }
            out.at(r, c) = s;
        }
    }
    return out;
}

Image abs_image(const Image& img) {
    Image out = img;
    for (double& v : out.data) v = std::fabs(v);
    return out;
}

}  // namespace

Image gaussian_window(double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_window: sigma must be positive");
    const int radius = window_radius(sigma);
    Image k(2 * radius + 1, 2 * radius + 1);
    for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx)
            k.at(dy + radius, dx + radius) =
                std::exp(-(static_cast<double>(dx) * dx + static_cast<double>(dy) * dy) /
                         (2.0 * sigma * sigma));
    return k;
}

WindowedVariations windowed_variations(const Image& img, double sigma) {
    validate_image(img);
    const Image gx = forward_diff_x(img);
    const Image gy = forward_diff_y(img);
    WindowedVariations wv;
    wv.d_x = blur_truncated(abs_image(gx), sigma);
    wv.d_y = blur_truncated(abs_image(gy), sigma);
    wv.l_x = abs_image(blur_truncated(gx, sigma));
    wv.l_y = abs_image(blur_truncated(gy, sigma));
    return wv;
}

RtvWeights decomposition_weights(const Image& img, const RtvConfig& cfg,
                                 const Image* activity_override) {
    validate_image(img);
    validate_rtv_config(cfg);

    const Image gx = forward_diff_x(img);
    const Image gy = forward_diff_y(img);
    const Image lx = abs_image(blur_truncated(gx, cfg.sigma));
    const Image ly = abs_image(blur_truncated(gy, cfg.sigma));

    Image inv_lx = lx;
    Image inv_ly = ly;
    for (double& v : inv_lx.data) v = 1.0 / (v + cfg.eps);
    for (double& v : inv_ly.data) v = 1.0 / (v + cfg.eps);
    const Image blur_inv_lx = blur_truncated(inv_lx, cfg.sigma);
    const Image blur_inv_ly = blur_truncated(inv_ly, cfg.sigma);

    RtvWeights w;
    w.s_x = Image(img.height, img.width);
    w.s_y = Image(img.height, img.width);
    for (int i = 0; i < img.pixels(); ++i) {
        w.s_x.data[i] = blur_inv_lx.data[i] / (std::fabs(gx.data[i]) + cfg.eps);
        w.s_y.data[i] = blur_inv_ly.data[i] / (std::fabs(gy.data[i]) + cfg.eps);
    }

    if (cfg.mode == RtvMode::rtv) {
        w.q = Image(img.height, img.width, 1.0);
    } else {
        Image v = activity_override ? *activity_override
                                    : normalized_activity(img, cfg.clip_high);
        if (!v.same_shape(img))
            throw std::invalid_argument("decomposition_weights: activity map shape mismatch");
        w.q = std::move(v);
        if (cfg.mode == RtvMode::lat_rtv)
            for (double& x : w.q.data) x = 1.0 / x;
    }
    return w;
}

SparseSystem assemble_system(const Image& prev, const Image& original, const RtvWeights& weights,
                             const RtvConfig& cfg) {
    if (!prev.same_shape(original))
        throw std::invalid_argument("assemble_system: image dimensions differ");
    const int h = prev.height, w = prev.width;
    const int n = h * w;

    // Edge weights: ex(p) couples p with its right neighbor, ey(p) with the
    // pixel below; both already include the activity factor.
    std::vector<double> ex(n, 0.0), ey(n, 0.0);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            const int p = r * w + c;
            if (c + 1 < w) ex[p] = weights.s_x.data[p] * weights.q.data[p];
            if (r + 1 < h) ey[p] = weights.s_y.data[p] * weights.q.data[p];
        }

    SparseSystem sys;
    CsrMatrix& a = sys.matrix;
    a.n = n;
    a.row_offsets.reserve(n + 1);
    a.row_offsets.push_back(0);
    a.col_indices.reserve(static_cast<size_t>(n) * 5);
    a.values.reserve(static_cast<size_t>(n) * 5);
    const double lambda = cfg.lambda;

    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const int p = r * w + c;
            double diag = 1.0;
            if (r > 0) {
                a.col_indices.push_back(p - w);
                a.values.push_back(-lambda * ey[p - w]);
                diag += lambda * ey[p - w];
            }
            if (c > 0) {
                a.col_indices.push_back(p - 1);
                a.values.push_back(-lambda * ex[p - 1]);
                diag += lambda * ex[p - 1];
            }
            const int diag_slot = static_cast<int>(a.values.size());
            a.col_indices.push_back(p);
            a.values.push_back(0.0);
            if (c + 1 < w) {
                a.col_indices.push_back(p + 1);
                a.values.push_back(-lambda * ex[p]);
                diag += lambda * ex[p];
            }
            if (r + 1 < h) {
                a.col_indices.push_back(p + w);
                a.values.push_back(-lambda * ey[p]);
                diag += lambda * ey[p];
            }
            a.values[diag_slot] = diag;
            a.row_offsets.push_back(static_cast<int>(a.col_indices.size()));
        }
    }

    sys.rhs = cfg.fidelity == RtvFidelity::previous_iterate ? prev.data : original.data;
    return sys;
}

namespace {

Image run_rtv(const Image& img, const RtvConfig& cfg, const Image* activity_override) {
    validate_image(img);
    validate_rtv_config(cfg);
    Image current = img;
    for (int t = 0; t < cfg.iterations; ++t) {
        const RtvWeights weights = decomposition_weights(current, cfg, activity_override);
        const SparseSystem sys = assemble_system(current, img, weights, cfg);
        std::vector<double> x;
        if (cfg.solver == RtvSolverChoice::pcg) {
            x = solve_pcg(sys, 1e-6, 10 * sys.matrix.n).x;
        } else {
            x = solve_dense(sys);
        }
        current.data = std::move(x);
    }
    return current;
}

}  // namespace

Image rtv_filter(const Image& img, const RtvConfig& cfg) { return run_rtv(img, cfg, nullptr); }

Image rtv_filter_with_activity(const Image& img, const RtvConfig& cfg,
                               const Image& activity_override) {
    return run_rtv(img, cfg, &activity_override);
}

}  // namespace latif
