#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "oracles.hpp"
#include "rtv.hpp"
#include "solver.hpp"

using latif::CsrMatrix;
using latif::SparseSystem;

namespace {

CsrMatrix identity_matrix(int n) {
    CsrMatrix m;
    m.n = n;
    m.row_offsets.push_back(0);
    for (int i = 0; i < n; ++i) {
        m.col_indices.push_back(i);
        m.values.push_back(1.0);
        m.row_offsets.push_back(i + 1);
    }
    return m;
}

SparseSystem assembled_random_system(oracle::Rng& rng, int h, int w, latif::RtvMode mode) {
    const latif::Image img = oracle::random_image(rng, h, w);
    latif::RtvConfig cfg;
    cfg.mode = mode;
    const latif::RtvWeights weights = latif::decomposition_weights(img, cfg);
    return latif::assemble_system(img, img, weights, cfg);
}

}  // namespace

TEST_CASE("spmv identity and dimension checks") {
    const CsrMatrix eye = identity_matrix(4);
    const std::vector<double> x = {1.0, -2.0, 3.5, 0.0};
    CHECK(latif::spmv(eye, x) == x);
    CHECK_THROWS_AS(latif::spmv(eye, std::vector<double>(3, 1.0)), std::invalid_argument);
}

TEST_CASE("spmv matches a dense multiply on assembled systems") {
    oracle::Rng rng(31);
    const SparseSystem sys = assembled_random_system(rng, 5, 5, latif::RtvMode::lat_rtv);
    const auto dense = oracle::dense_from_csr(sys.matrix);
    std::vector<double> x(sys.matrix.n);
    for (double& v : x) v = rng.uniform(-1.0, 1.0);
    const auto ys = latif::spmv(sys.matrix, x);
    const auto yd = oracle::dense_matvec(dense, sys.matrix.n, x);
    for (int i = 0; i < sys.matrix.n; ++i) CHECK(std::fabs(ys[i] - yd[i]) <= 1e-12);
}

TEST_CASE("pcg solves the identity system immediately") {
    SparseSystem sys;
    sys.matrix = identity_matrix(6);
    sys.rhs = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
    const auto res = latif::solve_pcg(sys, 1e-10, 10);
    CHECK(res.iterations <= 1);
    CHECK(res.x == sys.rhs);
}

TEST_CASE("pcg solves a diagonal system to the closed form") {
    const int n = 12;
    SparseSystem sys;
    sys.matrix.n = n;
    sys.matrix.row_offsets.push_back(0);
    for (int i = 0; i < n; ++i) {
        sys.matrix.col_indices.push_back(i);
        sys.matrix.values.push_back(static_cast<double>(i + 1));
        sys.matrix.row_offsets.push_back(i + 1);
    }
    sys.rhs.resize(n);
    for (int i = 0; i < n; ++i) sys.rhs[i] = 3.0 * (i + 1) - 7.0;
    const auto res = latif::solve_pcg(sys, 1e-12, 100);
    CHECK(res.relative_residual <= 1e-12);
    for (int i = 0; i < n; ++i)
        CHECK(res.x[i] == doctest::Approx(sys.rhs[i] / (i + 1)).epsilon(1e-10));
}

TEST_CASE("pcg and the dense solve agree on assembled systems") {
    oracle::Rng rng(1234);
    for (int trial = 0; trial < 10; ++trial) {
        const latif::RtvMode mode =
            trial % 2 == 0 ? latif::RtvMode::lat_rtv : latif::RtvMode::lat_rtvd;
        const SparseSystem sys = assembled_random_system(rng, 8, 8, mode);
        const auto pcg = latif::solve_pcg(sys, 1e-12, 10000);
        const auto dense = latif::solve_dense(sys);
        double max_diff = 0.0;
        for (int i = 0; i < sys.matrix.n; ++i)
            max_diff = std::max(max_diff, std::fabs(pcg.x[i] - dense[i]));
        CHECK(max_diff <= 1e-6);
    }
}

TEST_CASE("dense solve agrees with independent Gaussian elimination") {
    oracle::Rng rng(99);
    const SparseSystem sys = assembled_random_system(rng, 6, 6, latif::RtvMode::rtv);
    const auto mine = latif::solve_dense(sys);
    const auto ref =
        oracle::gaussian_elimination(oracle::dense_from_csr(sys.matrix), sys.rhs);
    for (int i = 0; i < sys.matrix.n; ++i) CHECK(mine[i] == doctest::Approx(ref[i]).epsilon(1e-9));
}

TEST_CASE("assembled systems satisfy x'Ax >= |x|^2") {
    oracle::Rng rng(42);
    for (int trial = 0; trial < 5; ++trial) {
        const SparseSystem sys = assembled_random_system(rng, 6, 7, latif::RtvMode::lat_rtvd);
        std::vector<double> x(sys.matrix.n);
        for (double& v : x) v = rng.uniform(-2.0, 2.0);
        const auto ax = latif::spmv(sys.matrix, x);
        double xax = 0.0, xx = 0.0;
        for (int i = 0; i < sys.matrix.n; ++i) {
            xax += x[i] * ax[i];
            xx += x[i] * x[i];
        }
        CHECK(xax >= xx * (1.0 - 1e-12));
    }
}

TEST_CASE("pcg reports non-convergence with the achieved residual") {
    oracle::Rng rng(7);
    const SparseSystem sys = assembled_random_system(rng, 8, 8, latif::RtvMode::lat_rtv);
    CHECK_THROWS_AS(latif::solve_pcg(sys, 1e-15, 1), latif::NumericError);
    try {
        latif::solve_pcg(sys, 1e-15, 1);
    } catch (const latif::NumericError& e) {
        CHECK(e.residual() > 0.0);
        CHECK(std::isfinite(e.residual()));
    }
}

TEST_CASE("dense solve rejects non-SPD and oversized systems") {
    SparseSystem zero;
    zero.matrix.n = 2;
    zero.matrix.row_offsets = {0, 0, 0};
    zero.rhs = {1.0, 1.0};
    CHECK_THROWS_AS(latif::solve_dense(zero), latif::NumericError);

    SparseSystem big;
    big.matrix = identity_matrix(10001);
    big.rhs.assign(10001, 0.0);
    CHECK_THROWS_AS(latif::solve_dense(big), std::invalid_argument);
}

TEST_CASE("pcg iteration count stays below the finite-termination bound") {
    oracle::Rng rng(2024);
    const latif::Image img = oracle::random_image(rng, 64, 64);
    latif::RtvConfig cfg;
    cfg.mode = latif::RtvMode::lat_rtv;
    cfg.lambda = 0.01;
    const auto weights = latif::decomposition_weights(img, cfg);
    const SparseSystem sys = latif::assemble_system(img, img, weights, cfg);
    const auto res = latif::solve_pcg(sys, 1e-6, 10 * sys.matrix.n);
    CHECK(res.iterations <= sys.matrix.n);
    CHECK(res.relative_residual <= 1e-6);
}
