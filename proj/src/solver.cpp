#include "solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace latif {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

std::vector<double> spmv(const CsrMatrix& a, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != a.n)
        throw std::invalid_argument("spmv: dimension mismatch");
    std::vector<double> y(a.n, 0.0);
    for (int i = 0; i < a.n; ++i) {
        double s = 0.0;
        for (int k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k)
            s += a.values[k] * x[a.col_indices[k]];
        y[i] = s;
    }
    return y;
}

PcgResult solve_pcg(const SparseSystem& system, double tol, int max_iter) {
    const CsrMatrix& a = system.matrix;
    const std::vector<double>& b = system.rhs;
    if (static_cast<int>(b.size()) != a.n)
        throw std::invalid_argument("solve_pcg: rhs dimension mismatch");
    if (tol <= 0.0) throw std::invalid_argument("solve_pcg: tol must be positive");

    const double bnorm = std::sqrt(dot(b, b));
    if (bnorm == 0.0) return {std::vector<double>(a.n, 0.0), 0.0, 0};

    // Jacobi preconditioner: inverse diagonal of A.
    std::vector<double> inv_diag(a.n, 1.0);
    for (int i = 0; i < a.n; ++i) {
        for (int k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k) {
            if (a.col_indices[k] == i && a.values[k] != 0.0) {
                inv_diag[i] = 1.0 / a.values[k];
                break;
            }
        }
    }

    std::vector<double> x = b;
    std::vector<double> r(a.n);
    {
        std::vector<double> ax = spmv(a, x);
        for (int i = 0; i < a.n; ++i) r[i] = b[i] - ax[i];
    }
    double rel = std::sqrt(dot(r, r)) / bnorm;
    if (rel <= tol) return {std::move(x), rel, 0};

    std::vector<double> z(a.n), p(a.n);
    for (int i = 0; i < a.n; ++i) z[i] = inv_diag[i] * r[i];
    p = z;
    double rz = dot(r, z);

    for (int iter = 1; iter <= max_iter; ++iter) {
        std::vector<double> ap = spmv(a, p);
        const double pap = dot(p, ap);
        if (!std::isfinite(pap) || pap <= 0.0)
            throw NumericError("solve_pcg: curvature breakdown (matrix not SPD?)", rel);
        const double alpha = rz / pap;
        for (int i = 0; i < a.n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        rel = std::sqrt(dot(r, r)) / bnorm;
        if (!std::isfinite(rel))
            throw NumericError("solve_pcg: non-finite residual", rel);
        if (rel <= tol) return {std::move(x), rel, iter};

        for (int i = 0; i < a.n; ++i) z[i] = inv_diag[i] * r[i];
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (int i = 0; i < a.n; ++i) p[i] = z[i] + beta * p[i];
    }
    throw NumericError("solve_pcg: no convergence after " + std::to_string(max_iter) +
                           " iterations (relative residual " + std::to_string(rel) + ")",
                       rel);
}

std::vector<double> solve_dense(const SparseSystem& system) {
    const CsrMatrix& a = system.matrix;
    if (static_cast<int>(system.rhs.size()) != a.n)
        throw std::invalid_argument("solve_dense: rhs dimension mismatch");
    if (a.n > 10000)
        throw std::invalid_argument("solve_dense: system larger than the 10000-row guard");

    const int n = a.n;
    std::vector<double> dense(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k)
            dense[static_cast<size_t>(i) * n + a.col_indices[k]] = a.values[k];

    // In-place Cholesky, lower triangle: A = L L^T.
    for (int j = 0; j < n; ++j) {
        double d = dense[static_cast<size_t>(j) * n + j];
        for (int k = 0; k < j; ++k) {
            const double ljk = dense[static_cast<size_t>(j) * n + k];
            d -= ljk * ljk;
        }
        if (!(d > 0.0))
            throw NumericError("solve_dense: matrix not positive definite", 0.0);
        const double ljj = std::sqrt(d);
        dense[static_cast<size_t>(j) * n + j] = ljj;
        for (int i = j + 1; i < n; ++i) {
            double s = dense[static_cast<size_t>(i) * n + j];
            for (int k = 0; k < j; ++k)
                s -= dense[static_cast<size_t>(i) * n + k] * dense[static_cast<size_t>(j) * n + k];
            dense[static_cast<size_t>(i) * n + j] = s / ljj;
        }
    }

    // Forward then backward substitution.
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) {
        double s = system.rhs[i];
        for (int k = 0; k < i; ++k) s -= dense[static_cast<size_t>(i) * n + k] * y[k];
        y[i] = s / dense[static_cast<size_t>(i) * n + i];
    }
    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = y[i];
        for (int k = i + 1; k < n; ++k) s -= dense[static_cast<size_t>(k) * n + i] * x[k];
        x[i] = s / dense[static_cast<size_t>(i) * n + i];
    }
    return x;
}

}  // namespace latif
