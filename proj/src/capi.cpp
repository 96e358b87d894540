// extern "C" bridge: opaque handles over the C++ core, exceptions mapped
// to status codes, message stashed per thread for latif_last_error().
#include "latif/latif.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "activity.hpp"
#include "diffusion.hpp"
#include "errors.hpp"
#include "image.hpp"
#include "metrics.hpp"
#include "noise.hpp"
#include "pgm.hpp"
#include "rtv.hpp"
#include "synth.hpp"

struct latif_image {
    latif::Image img;
};

namespace {

thread_local std::string g_last_error;

void clear_error() { g_last_error.clear(); }

latif_status fail(latif_status code, const char* msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
latif_status guarded(Fn&& fn) {
    clear_error();
    try {
        return fn();
    } catch (const latif::IoError& e) {
        return fail(LATIF_ERROR_IO, e.what());
    } catch (const latif::NumericError& e) {
        return fail(LATIF_ERROR_NUMERIC, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(LATIF_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LATIF_ERROR_NUMERIC, "out of memory");
    } catch (const std::exception& e) {
        return fail(LATIF_ERROR_NUMERIC, e.what());
    }
}

latif_status emit(latif::Image&& result, latif_image** out) {
    *out = new latif_image{std::move(result)};
    return LATIF_OK;
}

latif::DiffusionConfig to_core(const latif_ad_config& c) {
    latif::DiffusionConfig cfg;
    cfg.lambda = c.lambda;
    cfg.rho = c.rho;
    cfg.iterations = c.iterations;
    if (c.variant < LATIF_AD_PM_EXP || c.variant > LATIF_AD_PLAT_I)
        throw std::invalid_argument("unknown diffusion variant");
    cfg.variant = static_cast<latif::DiffusionVariant>(c.variant);
    cfg.activity.clip_high = c.clip_high;
    cfg.activity.update_interval = c.interval;
    if (c.neighbors != 4 && c.neighbors != 8)
        throw std::invalid_argument("neighbors must be 4 or 8");
    cfg.neighborhood = c.neighbors == 4 ? latif::Neighborhood::four_connected
                                        : latif::Neighborhood::eight_connected;
    return cfg;
}

latif::RtvConfig to_core(const latif_rtv_config& c) {
    latif::RtvConfig cfg;
    cfg.lambda = c.lambda;
    cfg.sigma = c.sigma;
    cfg.eps = c.eps;
    cfg.iterations = c.iterations;
    if (c.mode < LATIF_RTV_PLAIN || c.mode > LATIF_RTV_LAT_D)
        throw std::invalid_argument("unknown rtv mode");
    if (c.fidelity < LATIF_RTV_FIDELITY_PREVIOUS_ITERATE ||
        c.fidelity > LATIF_RTV_FIDELITY_ORIGINAL_IMAGE)
        throw std::invalid_argument("unknown rtv fidelity");
    if (c.solver < LATIF_RTV_SOLVER_PCG || c.solver > LATIF_RTV_SOLVER_DENSE)
        throw std::invalid_argument("unknown rtv solver");
    cfg.mode = static_cast<latif::RtvMode>(c.mode);
    cfg.fidelity = static_cast<latif::RtvFidelity>(c.fidelity);
    cfg.clip_high = c.clip_high;
    cfg.solver = static_cast<latif::RtvSolverChoice>(c.solver);
    return cfg;
}

}  // namespace

extern "C" {

const char* latif_version(void) { return "0.1.0"; }

const char* latif_last_error(void) { return g_last_error.c_str(); }

latif_status latif_image_create(int32_t height, int32_t width, latif_image** out) {
    return guarded([&]() -> latif_status {
        if (!out) return fail(LATIF_ERROR_INVALID_ARGUMENT, "null output pointer");
        if (height < 2 || width < 2)
            return fail(LATIF_ERROR_INVALID_ARGUMENT, "dimensions must be at least 2x2");
        return emit(latif::Image(height, width, 0.0), out);
    });
}

latif_status latif_image_clone(const latif_image* img, latif_image** out) {
    return guarded([&]() -> latif_status {
        if (!img || !out) return fail(LATIF_ERROR_INVALID_ARGUMENT, "null argument");
        return emit(latif::Image(img->img), out);
    });
}

void latif_image_destroy(latif_image* img) { delete img; }

int32_t latif_image_height(const latif_image* img) { return img ? img->img.height : 0; }

int32_t latif_image_width(const latif_image* img) { return img ? img->img.width : 0; }

latif_status latif_image_set_data(latif_image* img, const double* data, size_t len) {
    return guarded([&]() -> latif_status {
        if (!img || !data) return fail(LATIF_ERROR_INVALID_ARGUMENT, "null argument");
        if (len != img->img.data.size())
            return fail(LATIF_ERROR_INVALID_ARGUMENT, "length does not match height*width");
        for (size_t i = 0; i < len; ++i)
            if (!std::isfinite(data[i]))
                return fail(LATIF_ERROR_INVALID_ARGUMENT, "non-finite pixel value");
        std::memcpy(img->img.data.data(), data, len * sizeof(double));
        return LATIF_OK;
    });
}

latif_status latif_image_get_data(const latif_image* img, double* out, size_t len) {
    return guarded([&]() -> latif_status {
        if (!img || !out) return fail(LATIF_ERROR_INVALID_ARGUMENT, "null argument");
        if (len != img->img.data.size())
            return fail(LATIF_ERROR_INVALID_ARGUMENT, "length does not match height*width");
        std::memcpy(out, img->img.data.data(), len * sizeof(double));
        return LATIF_OK;
    });
}

latif_status latif_image_read_pgm(const char* path, latif_image** out) {
    return guarded([&]() -> latif_status {
        if (!path || !out) return fail(LATIF_ERROR_INVALID_ARGUMENT, "null argument");
        return emit(latif::read_pgm(path), out);
    });
}

latif_status latif_image_write_pgm(const latif_image* img, const char* path) {
    return guarded([&]() -> latif_status {
        if (!img || !path) return fail(LATIF_ERROR_INVALID_ARGUMENT, "null argument");
        latif::write_pgm(img->img, path);
        return LATIF_OK;
    });
}

void latif_ad_config_defaults(latif_ad_config* cfg) {
    if (!cfg) return;
    const latif::DiffusionConfig d;
    cfg->lambda = d.lambda;
    cfg->rho = d.rho;
    cfg->iterations = d.iterations;
    cfg->variant = LATIF_AD_PLAT;
    cfg->clip_high = d.activity.clip_high;
    cfg->interval = d.activity.update_interval;
    cfg->neighbors = 4;
}

latif_status latif_filter_ad(const latif_image* in, const latif_ad_config* cfg,
                             latif_image** out) {
    return guarded([&]() -> latif_status {
        if (!in || !cfg || !out) return fail(LATIF_ERROR_INVALID_ARGUMENT, "null argument");
        const latif::DiffusionConfig core = to_core(*cfg);
        latif::Image result = latif::is_pm_variant(core.variant)
                                  ? latif::diffuse_pm(in->img, core)
                                  : latif::diffuse_lat(in->img, core);
        return emit(std::move(result), out);
    });
}

void latif_tv_config_defaults(latif_tv_config* cfg) {
    if (!cfg) return;
    const latif::TvConfig d;
    cfg->lambda = d.lambda;
    cfg->dt = d.dt;
    cfg->eps = d.eps;
    cfg->iterations = d.iterations;
}

latif_status latif_filter_tv(const latif_image* in, const latif_tv_config* cfg,
                             latif_image** out) {
    return guarded([&]() -> latif_status {
        if (!in || !cfg || !out) return fail(LATIF_ERROR_INVALID_ARGUMENT, "null argument");
        latif::TvConfig core;
        core.lambda = cfg->lambda;
        core.dt = cfg->dt;
        core.eps = cfg->eps;
        core.iterations = cfg->iterations;
        return emit(latif::diffuse_tv(in->img, in->img, core), out);
    });
}

void latif_rtv_config_defaults(latif_rtv_config* cfg) {
    if (!cfg) return;
    const latif::RtvConfig d;
    cfg->lambda = d.lambda;
    cfg->sigma = d.sigma;
    cfg->eps = d.eps;
    cfg->iterations = d.iterations;
    cfg->mode = LATIF_RTV_LAT;
    cfg->fidelity = LATIF_RTV_FIDELITY_PREVIOUS_ITERATE;
    cfg->clip_high = d.clip_high;
    cfg->solver = LATIF_RTV_SOLVER_PCG;
}

latif_status latif_filter_rtv(const latif_image* in, const latif_rtv_config* cfg,
                              latif_image** out) {
    return guarded([&]() -> latif_status {
        if (!in || !cfg || !out) return fail(LATIF_ERROR_INVALID_ARGUMENT, "null argument");
        return emit(latif::rtv_filter(in->img, to_core(*cfg)), out);
    });
}

void latif_noise_spec_defaults(latif_noise_spec* spec) {
    if (!spec) return;
    const latif::NoiseSpec d;
    spec->sigma = d.sigma;
    spec->seed = d.seed;
    spec->clip = d.clip ? 1 : 0;
}

latif_status latif_add_gaussian_noise(const latif_image* in, const latif_noise_spec* spec,
                                      latif_image** out) {
    return guarded([&]() -> latif_status {
        if (!in || !spec || !out) return fail(LATIF_ERROR_INVALID_ARGUMENT, "null argument");
        latif::NoiseSpec core;
        core.sigma = spec->sigma;
        core.seed = spec->seed;
        core.clip = spec->clip != 0;
        return emit(latif::add_gaussian_noise(in->img, core), out);
    });
}

latif_status latif_synth(latif_synth_kind kind, int32_t height, int32_t width, uint64_t seed,
                         latif_image** out) {
    return guarded([&]() -> latif_status {
        if (!out) return fail(LATIF_ERROR_INVALID_ARGUMENT, "null output pointer");
        if (kind < LATIF_SYNTH_STEP || kind > LATIF_SYNTH_RAMP)
            return fail(LATIF_ERROR_INVALID_ARGUMENT, "unknown synth kind");
        return emit(latif::synth_piecewise(static_cast<latif::SynthKind>(kind), height, width,
                                           seed),
                    out);
    });
}

latif_status latif_psnr(const latif_image* a, const latif_image* b, double* out_db) {
    return guarded([&]() -> latif_status {
        if (!a || !b || !out_db) return fail(LATIF_ERROR_INVALID_ARGUMENT, "null argument");
        *out_db = latif::psnr(a->img, b->img);
        return LATIF_OK;
    });
}

latif_status latif_discrete_tv(const latif_image* img, double* out) {
    return guarded([&]() -> latif_status {
        if (!img || !out) return fail(LATIF_ERROR_INVALID_ARGUMENT, "null argument");
        *out = latif::discrete_tv(img->img);
        return LATIF_OK;
    });
}

}  // extern "C"
