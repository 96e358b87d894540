/* latif - local activity-tuned image filtering.
 *
 * C interface to the filtering core. All functions return a latif_status;
 * every output object is created by the library and released with its
 * destroy function. On failure, latif_last_error() describes the most
 * recent error on the calling thread.
 */
#ifndef LATIF_H
#define LATIF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LATIF_API __declspec(dllexport)
#else
#define LATIF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum latif_status {
    LATIF_OK = 0,
    LATIF_ERROR_INVALID_ARGUMENT = 1, /* bad parameter or contract violation */
    LATIF_ERROR_IO = 2,               /* file missing, malformed, or unwritable */
    LATIF_ERROR_NUMERIC = 3           /* solver breakdown or non-finite result */
} latif_status;

/* Opaque grayscale image; real-valued intensities on a nominal [0,255]
 * scale, stored row-major. */
typedef struct latif_image latif_image;

LATIF_API const char* latif_version(void);

/* Message for the most recent failure on this thread; empty string if the
 * last call succeeded. The pointer stays valid until the next call. */
LATIF_API const char* latif_last_error(void);

/* ---- image lifecycle ---------------------------------------------- */

LATIF_API latif_status latif_image_create(int32_t height, int32_t width, latif_image** out);
LATIF_API latif_status latif_image_clone(const latif_image* img, latif_image** out);
LATIF_API void latif_image_destroy(latif_image* img);

LATIF_API int32_t latif_image_height(const latif_image* img);
LATIF_API int32_t latif_image_width(const latif_image* img);

/* len must equal height*width; values must be finite. */
LATIF_API latif_status latif_image_set_data(latif_image* img, const double* data, size_t len);
LATIF_API latif_status latif_image_get_data(const latif_image* img, double* out, size_t len);

/* PGM interchange: P2/P5 with maxval 255 on read, canonical P5 on write
 * (values rounded half away from zero and clamped to [0,255]). */
LATIF_API latif_status latif_image_read_pgm(const char* path, latif_image** out);
LATIF_API latif_status latif_image_write_pgm(const latif_image* img, const char* path);

/* ---- anisotropic diffusion ----------------------------------------- */

typedef enum latif_ad_variant {
    LATIF_AD_PM_EXP = 0, /* exp(-(|g|/rho)^2) */
    LATIF_AD_PM_FRAC,    /* 1/(1+(|g|/rho)^2) */
    LATIF_AD_FLAT,       /* activity computed once */
    LATIF_AD_TLAT,       /* activity recomputed every iteration */
    LATIF_AD_PLAT,       /* activity recomputed every `interval` iterations */
    LATIF_AD_FLAT_I,     /* squared-gradient edge stop, activity once */
    LATIF_AD_TLAT_I,
    LATIF_AD_PLAT_I
} latif_ad_variant;

typedef struct latif_ad_config {
    double lambda;   /* step weight, (0, 1/neighbors] */
    double rho;      /* rho for pm_*, rho1 for flat/tlat/plat, rho2^2 for *_i */
    int32_t iterations;
    latif_ad_variant variant;
    double clip_high;  /* activity clip bound h */
    int32_t interval;  /* activity update interval l (plat family) */
    int32_t neighbors; /* 4 or 8 */
} latif_ad_config;

/* lambda 0.25, rho 30, 11 iterations, plat, h 30, interval 5, 4 neighbors. */
LATIF_API void latif_ad_config_defaults(latif_ad_config* cfg);
LATIF_API latif_status latif_filter_ad(const latif_image* in, const latif_ad_config* cfg,
                                       latif_image** out);

/* ---- total-variation baseline --------------------------------------- */

typedef struct latif_tv_config {
    double lambda; /* fidelity weight */
    double dt;     /* descent step */
    double eps;    /* gradient regularizer */
    int32_t iterations;
} latif_tv_config;

/* lambda 0.25, dt 0.2, eps 1e-3, 50 iterations. */
LATIF_API void latif_tv_config_defaults(latif_tv_config* cfg);
LATIF_API latif_status latif_filter_tv(const latif_image* in, const latif_tv_config* cfg,
                                       latif_image** out);

/* ---- relative total variation --------------------------------------- */

typedef enum latif_rtv_mode {
    LATIF_RTV_PLAIN = 0,
    LATIF_RTV_LAT,  /* penalty / activity: smoothing */
    LATIF_RTV_LAT_D /* penalty * activity: denoising */
} latif_rtv_mode;

typedef enum latif_rtv_fidelity {
    LATIF_RTV_FIDELITY_PREVIOUS_ITERATE = 0,
    LATIF_RTV_FIDELITY_ORIGINAL_IMAGE
} latif_rtv_fidelity;

typedef enum latif_rtv_solver {
    LATIF_RTV_SOLVER_PCG = 0,
    LATIF_RTV_SOLVER_DENSE /* direct solve, images up to 100x100 */
} latif_rtv_solver;

typedef struct latif_rtv_config {
    double lambda;
    double sigma; /* Gaussian window scale, pixels */
    double eps;
    int32_t iterations;
    latif_rtv_mode mode;
    latif_rtv_fidelity fidelity;
    double clip_high;
    latif_rtv_solver solver;
} latif_rtv_config;

/* lambda 0.01, sigma 3, eps 1e-3, 4 iterations, lat mode,
 * previous-iterate fidelity, h 30, pcg solver. */
LATIF_API void latif_rtv_config_defaults(latif_rtv_config* cfg);
LATIF_API latif_status latif_filter_rtv(const latif_image* in, const latif_rtv_config* cfg,
                                        latif_image** out);

/* ---- noise, synthesis, metrics --------------------------------------- */

typedef struct latif_noise_spec {
    double sigma;
    uint64_t seed;
    int32_t clip; /* nonzero: clamp to [0,255] after adding noise */
} latif_noise_spec;

/* sigma 13, seed 0, clip on. */
LATIF_API void latif_noise_spec_defaults(latif_noise_spec* spec);

/* Adds i.i.d. zero-mean Gaussian noise from a seeded splitmix64 +
 * Box-Muller stream (documented in the README); bit-reproducible. */
LATIF_API latif_status latif_add_gaussian_noise(const latif_image* in,
                                                const latif_noise_spec* spec, latif_image** out);

typedef enum latif_synth_kind {
    LATIF_SYNTH_STEP = 0, /* left half 0, right half 200 */
    LATIF_SYNTH_BLOCKS,   /* seeded grid over 8 plateau values */
    LATIF_SYNTH_CLIPART,  /* overlapping flat shapes */
    LATIF_SYNTH_RAMP      /* horizontal 0..255 ramp */
} latif_synth_kind;

LATIF_API latif_status latif_synth(latif_synth_kind kind, int32_t height, int32_t width,
                                   uint64_t seed, latif_image** out);

/* 10*log10(255^2/MSE); +infinity when the images are identical. */
LATIF_API latif_status latif_psnr(const latif_image* a, const latif_image* b, double* out_db);

/* Sum over pixels of the forward-difference gradient magnitude. */
LATIF_API latif_status latif_discrete_tv(const latif_image* img, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LATIF_H */
