#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "diffusion.hpp"
#include "fixtures.hpp"
#include "metrics.hpp"
#include "noise.hpp"
#include "oracles.hpp"

using latif::DiffusionConfig;
using latif::DiffusionVariant;
using latif::Image;

TEST_CASE("edge-stop functions hit their pinned values") {
    CHECK(latif::edge_stop_pm_exp(0.0, 10.0) == 1.0);
    CHECK(latif::edge_stop_pm_exp(10.0, 10.0) == doctest::Approx(0.36787944117144233).epsilon(1e-12));
    CHECK(latif::edge_stop_pm_exp(30.0, 10.0) ==
          doctest::Approx(0.00012340980408667956).epsilon(1e-12));

    CHECK(latif::edge_stop_pm_frac(0.0, 10.0) == 1.0);
    CHECK(latif::edge_stop_pm_frac(10.0, 10.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(latif::edge_stop_pm_frac(1e9, 10.0) < 1e-12);

    CHECK(latif::edge_stop_lat(0.0, 0.3, 30.0) == 1.0);
    CHECK(latif::edge_stop_lat(30.0, 1.0, 30.0) ==
          doctest::Approx(0.36787944117144233).epsilon(1e-12));
    // Scaling: grad 15 with k = 0.5 matches grad 30 with k = 1.
    CHECK(latif::edge_stop_lat(15.0, 0.5, 30.0) ==
          doctest::Approx(0.36787944117144233).epsilon(1e-12));

    CHECK(latif::edge_stop_lat_i(0.0, 0.7, 300.0) == 1.0);
    // grad^2 = rho2^2 * k gives exp(-1).
    CHECK(latif::edge_stop_lat_i(std::sqrt(300.0 * 0.7), 0.7, 300.0) ==
          doctest::Approx(0.36787944117144233).epsilon(1e-12));
}

TEST_CASE("edge-stop functions reject non-positive activity") {
    CHECK_THROWS_AS(latif::edge_stop_lat(1.0, 0.0, 30.0), std::invalid_argument);
    CHECK_THROWS_AS(latif::edge_stop_lat_i(1.0, -0.1, 300.0), std::invalid_argument);
}

TEST_CASE("edge-stop range and monotonicity over random gradients") {
    oracle::Rng rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        double g1 = rng.uniform(0.0, 400.0);
        double g2 = rng.uniform(0.0, 400.0);
        if (g1 > g2) std::swap(g1, g2);
        const double rho = rng.uniform(1.0, 60.0);
        const double k = rng.uniform(0.05, 1.0);

        const double values[4][2] = {
            {latif::edge_stop_pm_exp(g1, rho), latif::edge_stop_pm_exp(g2, rho)},
            {latif::edge_stop_pm_frac(g1, rho), latif::edge_stop_pm_frac(g2, rho)},
            {latif::edge_stop_lat(g1, k, rho), latif::edge_stop_lat(g2, k, rho)},
            {latif::edge_stop_lat_i(g1, k, rho * rho), latif::edge_stop_lat_i(g2, k, rho * rho)}};
        for (const auto& pair : values) {
            CHECK(pair[0] > 0.0);
            CHECK(pair[0] <= 1.0);
            CHECK(pair[1] <= pair[0]);
        }
        // With rho1^2 = rho2^2 and k <= 1, the ratio form diffuses no more
        // than the squared form.
        CHECK(latif::edge_stop_lat(g1, k, rho) <=
              latif::edge_stop_lat_i(g1, k, rho * rho) + 1e-15);
    }
}

TEST_CASE("diffuse_pm leaves constant images unchanged") {
    DiffusionConfig cfg;
    cfg.variant = DiffusionVariant::pm_exp;
    cfg.rho = 10.0;
    cfg.iterations = 7;
    const Image img(6, 6, 33.0);
    CHECK(oracle::bit_equal(latif::diffuse_pm(img, cfg), img));
}

TEST_CASE("diffuse_pm single step matches an independent recomputation") {
    Image img(3, 3);
    img.data = {10.0, 20.0, 30.0, 40.0, 50.0, 60.0, 70.0, 80.0, 90.0};
    DiffusionConfig cfg;
    cfg.variant = DiffusionVariant::pm_exp;
    cfg.rho = 10.0;
    cfg.lambda = 0.25;
    cfg.iterations = 1;
    const Image out = latif::diffuse_pm(img, cfg);

    // Center pixel by direct evaluation of the update with N, S, W, E.
    const double center = img.at(1, 1);
    const double nbrs[4] = {img.at(0, 1), img.at(2, 1), img.at(1, 0), img.at(1, 2)};
    double flux = 0.0;
    for (double nb : nbrs) {
        const double g = nb - center;
        flux += std::exp(-(g / 10.0) * (g / 10.0)) * g;
    }
    CHECK(out.at(1, 1) == doctest::Approx(center + 0.25 * flux).epsilon(1e-14));
}

TEST_CASE("diffuse_pm blurs a small step and conserves the mean") {
    Image img(8, 8, 100.0);
    for (int r = 0; r < 8; ++r)
        for (int c = 4; c < 8; ++c) img.at(r, c) = 104.0;  // step height well below rho
    DiffusionConfig cfg;
    cfg.variant = DiffusionVariant::pm_exp;
    cfg.rho = 30.0;
    cfg.iterations = 20;
    const Image out = latif::diffuse_pm(img, cfg);

    const double before = oracle::image_sum(img);
    const double after = oracle::image_sum(out);
    CHECK(std::fabs(after - before) <= 1e-9 * std::fabs(before));
    // The step softens toward the average.
    CHECK(out.at(4, 3) > img.at(4, 3));
    CHECK(out.at(4, 4) < img.at(4, 4));
}

TEST_CASE("diffuse_pm conserves the mean with 8-connected neighborhoods too") {
    oracle::Rng rng(55);
    const Image img = oracle::random_image(rng, 16, 16);
    DiffusionConfig cfg;
    cfg.variant = DiffusionVariant::pm_frac;
    cfg.rho = 20.0;
    cfg.lambda = 0.125;
    cfg.neighborhood = latif::Neighborhood::eight_connected;
    cfg.iterations = 25;
    const Image out = latif::diffuse_pm(img, cfg);
    CHECK(std::fabs(oracle::image_sum(out) - oracle::image_sum(img)) <=
          1e-9 * std::fabs(oracle::image_sum(img)));
}

TEST_CASE("diffuse_lat leaves constant images unchanged") {
    DiffusionConfig cfg;
    for (DiffusionVariant v : {DiffusionVariant::flat, DiffusionVariant::tlat,
                               DiffusionVariant::plat, DiffusionVariant::flat_i,
                               DiffusionVariant::tlat_i, DiffusionVariant::plat_i}) {
        cfg.variant = v;
        cfg.rho = v == DiffusionVariant::flat_i || v == DiffusionVariant::tlat_i ||
                          v == DiffusionVariant::plat_i
                      ? 300.0
                      : 30.0;
        const Image img(6, 6, 123.0);
        CHECK(oracle::bit_equal(latif::diffuse_lat(img, cfg), img));
    }
}

TEST_CASE("plat degenerates to flat and tlat at the interval extremes") {
    oracle::Rng rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        const Image img = oracle::random_image(rng, 10, 10);
        DiffusionConfig cfg;
        cfg.rho = 30.0;
        cfg.iterations = 9;

        cfg.variant = DiffusionVariant::plat;
        cfg.activity.update_interval = cfg.iterations;
        const Image plat_as_flat = latif::diffuse_lat(img, cfg);
        cfg.variant = DiffusionVariant::flat;
        const Image flat = latif::diffuse_lat(img, cfg);
        CHECK(oracle::bit_equal(plat_as_flat, flat));

        cfg.variant = DiffusionVariant::plat;
        cfg.activity.update_interval = 1;
        const Image plat_as_tlat = latif::diffuse_lat(img, cfg);
        cfg.variant = DiffusionVariant::tlat;
        const Image tlat = latif::diffuse_lat(img, cfg);
        CHECK(oracle::bit_equal(plat_as_tlat, tlat));
    }
}

TEST_CASE("diffuse_lat shrinks ringing while freezing the plateaus") {
    const Image noisy = fixtures::ringing_step(32, 64);
    DiffusionConfig cfg;
    cfg.variant = DiffusionVariant::plat;
    cfg.rho = 30.0;
    cfg.lambda = 0.25;
    cfg.activity.clip_high = 30.0;
    cfg.activity.update_interval = 5;
    cfg.iterations = 11;
    const Image out = latif::diffuse_lat(noisy, cfg);

    CHECK(fixtures::ringing_amplitude(out) < fixtures::ringing_amplitude(noisy));
    CHECK(std::fabs(fixtures::plateau_mean(out, -1) - 0.0) < 1.0);
    CHECK(std::fabs(fixtures::plateau_mean(out, +1) - 100.0) < 1.0);
}

TEST_CASE("diffuse_lat output stays inside the input range") {
    oracle::Rng rng(63);
    for (int trial = 0; trial < 10; ++trial) {
        const Image img = oracle::random_image(rng, 9, 9);
        DiffusionConfig cfg;
        cfg.variant = trial % 2 == 0 ? DiffusionVariant::tlat : DiffusionVariant::plat_i;
        cfg.rho = cfg.variant == DiffusionVariant::plat_i ? 300.0 : 30.0;
        cfg.activity.update_interval = 3;
        cfg.iterations = 8;
        const Image out = latif::diffuse_lat(img, cfg);
        const auto [in_min, in_max] = std::minmax_element(img.data.begin(), img.data.end());
        for (double v : out.data) {
            CHECK(v >= *in_min - 1e-12);
            CHECK(v <= *in_max + 1e-12);
        }
    }
}

TEST_CASE("iteration count zero is the identity for the diffusion filters") {
    oracle::Rng rng(3);
    const Image img = oracle::random_image(rng, 7, 7);
    DiffusionConfig cfg;
    cfg.iterations = 0;
    cfg.variant = DiffusionVariant::pm_exp;
    cfg.rho = 10.0;
    CHECK(oracle::bit_equal(latif::diffuse_pm(img, cfg), img));
    cfg.variant = DiffusionVariant::flat;
    cfg.rho = 30.0;
    CHECK(oracle::bit_equal(latif::diffuse_lat(img, cfg), img));
    latif::TvConfig tv;
    tv.iterations = 0;
    CHECK(oracle::bit_equal(latif::diffuse_tv(img, img, tv), img));
}

TEST_CASE("diffuse_pm and diffuse_lat reject mismatched variants") {
    const Image img(4, 4, 1.0);
    DiffusionConfig cfg;
    cfg.variant = DiffusionVariant::flat;
    CHECK_THROWS_AS(latif::diffuse_pm(img, cfg), std::invalid_argument);
    cfg.variant = DiffusionVariant::pm_exp;
    CHECK_THROWS_AS(latif::diffuse_lat(img, cfg), std::invalid_argument);
}

TEST_CASE("lambda above the stability bound is rejected") {
    const Image img(4, 4, 1.0);
    DiffusionConfig cfg;
    cfg.variant = DiffusionVariant::pm_exp;
    cfg.lambda = 0.3;  // above 1/4
    CHECK_THROWS_AS(latif::diffuse_pm(img, cfg), std::invalid_argument);
    cfg.lambda = 0.2;
    cfg.neighborhood = latif::Neighborhood::eight_connected;  // bound becomes 1/8
    CHECK_THROWS_AS(latif::diffuse_pm(img, cfg), std::invalid_argument);
}

TEST_CASE("diffuse_tv fixes constant images") {
    const Image img(6, 6, 50.0);
    latif::TvConfig cfg;
    cfg.iterations = 25;
    CHECK(oracle::bit_equal(latif::diffuse_tv(img, img, cfg), img));
}

TEST_CASE("pure TV flow does not increase the TV energy") {
    oracle::Rng rng(123);
    const Image start = oracle::random_image(rng, 12, 12);
    latif::TvConfig cfg;
    cfg.lambda = 0.0;
    cfg.dt = 0.01;
    cfg.eps = 1e-3;
    cfg.iterations = 1;
    Image current = start;
    double energy = oracle::brute_discrete_tv(current);
    for (int t = 0; t < 30; ++t) {
        current = latif::diffuse_tv(current, start, cfg);
        const double next_energy = oracle::brute_discrete_tv(current);
        CHECK(next_energy <= energy + 1e-9);
        energy = next_energy;
    }
}

TEST_CASE("TV descent improves PSNR on a noisy step") {
    const Image clean = fixtures::clean_step_100(32, 32);
    latif::NoiseSpec spec;
    spec.sigma = 10.0;
    spec.seed = 2718;
    spec.clip = false;
    const Image noisy = latif::add_gaussian_noise(clean, spec);

    latif::TvConfig cfg;  // lambda 0.25, 50 iterations by default
    const Image filtered = latif::diffuse_tv(noisy, noisy, cfg);
    CHECK(latif::psnr(filtered, clean) > latif::psnr(noisy, clean));
}
