#pragma once

#include <vector>

namespace latif {

// Square sparse matrix in compressed sparse row form. Column indices are
// sorted within each row and the sparsity pattern is structurally symmetric.
struct CsrMatrix {
    int n = 0;
    std::vector<int> row_offsets;   // length n+1
    std::vector<int> col_indices;
    std::vector<double> values;

    int nnz() const { return static_cast<int>(col_indices.size()); }
};

// A linear system A x = b with A symmetric positive definite.
struct SparseSystem {
    CsrMatrix matrix;
    std::vector<double> rhs;
};

std::vector<double> spmv(const CsrMatrix& a, const std::vector<double>& x);

struct PcgResult {
    std::vector<double> x;
    double relative_residual = 0.0;
    int iterations = 0;
};

/// Jacobi-preconditioned conjugate gradient. The initial guess is the
/// right-hand side, which is within O(lambda) of the solution for the
/// identity-shifted systems this library assembles. Throws NumericError
/// when max_iter is exhausted or a non-finite value appears.
PcgResult solve_pcg(const SparseSystem& system, double tol, int max_iter);

/// Dense Cholesky solve of the expanded matrix. Oracle-grade path,
/// guarded to n <= 10000.
std::vector<double> solve_dense(const SparseSystem& system);

}  // namespace latif
