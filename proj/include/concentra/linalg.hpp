#pragma once

#include <vector>

namespace concentra {

using Vec = std::vector<double>;

/// Dense symmetric matrix, row-major full storage.
struct SymMat {
    int n = 0;
    std::vector<double> a;

    SymMat() = default;
    explicit SymMat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    static SymMat identity(int dim);
};

double dot(const Vec& x, const Vec& y);
double norm(const Vec& x);
Vec sub(const Vec& x, const Vec& y);
Vec add(const Vec& x, const Vec& y);
Vec scale(const Vec& x, double s);
double dist(const Vec& x, const Vec& y);

/// Cholesky factorization A = L L^T. Returns false if a pivot falls at or
/// below `pivot_tol` (matrix not positive definite at that tolerance).
bool cholesky(const SymMat& A, SymMat& L, double pivot_tol = 1e-12);

/// Determinant via Cholesky (product of squared pivots).
/// Throws NotPositiveDefinite if factorization fails.
double det_positive_definite(const SymMat& A);

/// Solve A x = b with A positive definite.
Vec solve_positive_definite(const SymMat& A, const Vec& b);

/// Lower-triangular solve L y = b, and L^T x = y.
Vec forward_substitute(const SymMat& L, const Vec& b);
Vec backward_substitute_transposed(const SymMat& L, const Vec& b);

}  // namespace concentra
