#include "diffusion.hpp"

#include <cmath>
#include <stdexcept>

namespace latif {

bool is_pm_variant(DiffusionVariant v) {
    return v == DiffusionVariant::pm_exp || v == DiffusionVariant::pm_frac;
}

bool is_squared_form(DiffusionVariant v) {
    return v == DiffusionVariant::flat_i || v == DiffusionVariant::tlat_i ||
           v == DiffusionVariant::plat_i;
}

void validate_diffusion_config(const DiffusionConfig& cfg) {
    const double bound = 1.0 / static_cast<double>(neighbor_offsets(cfg.neighborhood).size());
    if (!(cfg.lambda > 0.0) || cfg.lambda > bound)
        throw std::invalid_argument("diffusion: lambda must lie in (0, 1/|neighborhood|]");
    if (!(cfg.rho > 0.0)) throw std::invalid_argument("diffusion: rho must be positive");
    if (cfg.iterations < 0)
        throw std::invalid_argument("diffusion: iterations must be non-negative");
    if (!is_pm_variant(cfg.variant)) {
        if (!(cfg.activity.clip_high > 0.5))
            throw std::invalid_argument("diffusion: activity clip_high must exceed 1/2");
        if (cfg.activity.update_interval < 1)
            throw std::invalid_argument("diffusion: activity update_interval must be positive");
    }
}

double edge_stop_pm_exp(double grad, double rho) {
    const double r = std::fabs(grad) / rho;
    return std::exp(-r * r);
}

double edge_stop_pm_frac(double grad, double rho) {
    const double r = std::fabs(grad) / rho;
    return 1.0 / (1.0 + r * r);
}

double edge_stop_lat(double grad, double k, double rho1) {
    if (!(k > 0.0)) throw std::invalid_argument("edge_stop_lat: activity must be positive");
    const double r = std::fabs(grad) / (rho1 * k);
    return std::exp(-r * r);
}

double edge_stop_lat_i(double grad, double k, double rho2_sq) {
    if (!(k > 0.0)) throw std::invalid_argument("edge_stop_lat_i: activity must be positive");
    return std::exp(-(grad * grad) / (rho2_sq * k));
}

namespace {

// One explicit step; `activity` is null for the plain PM variants.
Image diffusion_step(const Image& img, const DiffusionConfig& cfg, const Image* activity) {
    const auto offsets = neighbor_offsets(cfg.neighborhood);
    Image next(img.height, img.width);
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            double flux = 0.0;
            for (const Offset& o : offsets) {
                const double g = neighbor_gradient(img, r, c, o);
                double stop;
                switch (cfg.variant) {
                    case DiffusionVariant::pm_exp:
                        stop = edge_stop_pm_exp(g, cfg.rho);
                        break;
                    case DiffusionVariant::pm_frac:
                        stop = edge_stop_pm_frac(g, cfg.rho);
                        break;
                    default:
                        stop = is_squared_form(cfg.variant)
                                   ? edge_stop_lat_i(g, activity->at(r, c), cfg.rho)
                                   : edge_stop_lat(g, activity->at(r, c), cfg.rho);
                        break;
                }
                flux += stop * g;
            }
            next.at(r, c) = img.at(r, c) + cfg.lambda * flux;
        }
    }
    return next;
}

}  // namespace

Image diffuse_pm(const Image& img, const DiffusionConfig& cfg) {
    validate_image(img);
    validate_diffusion_config(cfg);
    if (!is_pm_variant(cfg.variant))
        throw std::invalid_argument("diffuse_pm: variant must be pm_exp or pm_frac");
    Image current = img;
    for (int t = 0; t < cfg.iterations; ++t) current = diffusion_step(current, cfg, nullptr);
    return current;
}

Image diffuse_lat(const Image& img, const DiffusionConfig& cfg) {
    validate_image(img);
    validate_diffusion_config(cfg);
    if (is_pm_variant(cfg.variant))
        throw std::invalid_argument("diffuse_lat: variant must be one of the activity-tuned set");
    if (cfg.iterations == 0) return img;

    ActivityConfig sched = cfg.activity;
    sched.max_iterations = cfg.iterations;
    switch (cfg.variant) {
        case DiffusionVariant::flat:
        case DiffusionVariant::flat_i:
            sched.update_interval = cfg.iterations;
            break;
        case DiffusionVariant::tlat:
        case DiffusionVariant::tlat_i:
            sched.update_interval = 1;
            break;
        default:
            break;  // plat family keeps the configured interval
    }
    validate_activity_config(sched);

    Image current = img;
    std::optional<Image> cache;
    for (int t = 0; t < cfg.iterations; ++t) {
        const Image tuned = scheduled_activity(
            t, sched, [&] { return normalized_activity(current, sched.clip_high); }, cache);
        current = diffusion_step(current, cfg, &tuned);
    }
    return current;
}

void validate_tv_config(const TvConfig& cfg) {
    if (!(cfg.lambda >= 0.0)) throw std::invalid_argument("tv: lambda must be non-negative");
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("tv: dt must be positive");
    if (!(cfg.eps > 0.0)) throw std::invalid_argument("tv: eps must be positive");
    if (cfg.iterations < 0) throw std::invalid_argument("tv: iterations must be non-negative");
}

Image diffuse_tv(const Image& img, const Image& original, const TvConfig& cfg) {
    validate_image(img);
    validate_image(original);
    if (!img.same_shape(original))
        throw std::invalid_argument("diffuse_tv: image and original must share dimensions");
    validate_tv_config(cfg);

    Image current = img;
    Image px(img.height, img.width), py(img.height, img.width);
    for (int t = 0; t < cfg.iterations; ++t) {
        const Image gx = forward_diff_x(current);
        const Image gy = forward_diff_y(current);
        for (int i = 0; i < current.pixels(); ++i) {
            const double m =
                std::sqrt(gx.data[i] * gx.data[i] + gy.data[i] * gy.data[i] + cfg.eps * cfg.eps);
            px.data[i] = gx.data[i] / m;
            py.data[i] = gy.data[i] / m;
        }
        Image next(img.height, img.width);
        for (int r = 0; r < current.height; ++r) {
            for (int c = 0; c < current.width; ++c) {
                // Negative transpose of the forward difference.
                double div = px.at(r, c) + py.at(r, c);
                if (c > 0) div -= px.at(r, c - 1);
                if (r > 0) div -= py.at(r - 1, c);
                next.at(r, c) = current.at(r, c) +
                                cfg.dt * (div - cfg.lambda * (current.at(r, c) - original.at(r, c)));
            }
        }
        current = std::move(next);
    }
    return current;
}

}  // namespace latif
