#pragma once

#include "activity.hpp"
#include "image.hpp"

namespace latif {

enum class DiffusionVariant {
    pm_exp,   // exponential edge stop on the gradient only
    pm_frac,  // rational edge stop on the gradient only
    flat,     // activity computed once, exponential ratio form
    tlat,     // activity recomputed every iteration
    plat,     // activity recomputed every update_interval iterations
    flat_i,   // squared-gradient form, activity once
    tlat_i,
    plat_i,
};

bool is_pm_variant(DiffusionVariant v);
bool is_squared_form(DiffusionVariant v);  // the "_i" family

struct DiffusionConfig {
    double lambda = 0.25;  // step weight; explicit stability needs lambda <= 1/|N|
    // Edge-stop scale. Interpreted as rho for pm_*, rho1 for flat/tlat/plat,
    // and rho2^2 directly for the _i variants.
    double rho = 30.0;
    int iterations = 11;
    DiffusionVariant variant = DiffusionVariant::plat;
    ActivityConfig activity{};
    Neighborhood neighborhood = Neighborhood::four_connected;
};

/// Checks parameter ranges; activity.max_iterations is synchronized to
/// `iterations` by the filters, so only clip_high/update_interval matter here.
void validate_diffusion_config(const DiffusionConfig& cfg);

double edge_stop_pm_exp(double grad, double rho);
double edge_stop_pm_frac(double grad, double rho);
/// exp(-(|grad| / (rho1 * k))^2); the activity k enters squared.
double edge_stop_lat(double grad, double k, double rho1);
/// exp(-grad^2 / (rho2_sq * k)); the activity k enters linearly.
double edge_stop_lat_i(double grad, double k, double rho2_sq);

/// Explicit Perona-Malik iterations with replicate boundaries.
Image diffuse_pm(const Image& img, const DiffusionConfig& cfg);

/// Activity-tuned diffusion; the edge stop takes the center pixel's
/// scheduled activity. Variant selects both the edge-stop form and the
/// activity update schedule.
Image diffuse_lat(const Image& img, const DiffusionConfig& cfg);

struct TvConfig {
    double lambda = 0.25;  // fidelity weight
    double dt = 0.2;       // descent step
    double eps = 1e-3;     // gradient-magnitude regularizer
    int iterations = 50;
};

void validate_tv_config(const TvConfig& cfg);

/// Explicit descent on the total-variation model:
/// I <- I + dt * [ div(grad I / sqrt(|grad I|^2 + eps^2)) - lambda (I - original) ]
/// with forward-difference gradient and its negative-transpose divergence.
Image diffuse_tv(const Image& img, const Image& original, const TvConfig& cfg);

}  // namespace latif
