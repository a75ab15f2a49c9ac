#include "concentra/linalg.hpp"

#include <cmath>
#include <cstddef>

#include "concentra/errors.hpp"

namespace concentra {

SymMat SymMat::identity(int dim) {
    SymMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

double dot(const Vec& x, const Vec& y) {
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

double norm(const Vec& x) { return std::sqrt(dot(x, x)); }

Vec sub(const Vec& x, const Vec& y) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

Vec add(const Vec& x, const Vec& y) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

Vec scale(const Vec& x, double s) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] * s;
    return r;
}

double dist(const Vec& x, const Vec& y) {
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return std::sqrt(s);
}

bool cholesky(const SymMat& A, SymMat& L, double pivot_tol) {
    const int n = A.n;
    L = SymMat(n);
    for (int j = 0; j < n; ++j) {
        double d = A(j, j);
        for (int k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
        if (!(d > pivot_tol)) return false;
        L(j, j) = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            double s = A(i, j);
            for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            L(i, j) = s / L(j, j);
        }
    }
    return true;
}

double det_positive_definite(const SymMat& A) {
    SymMat L;
    if (!cholesky(A, L)) throw NotPositiveDefinite("determinant: matrix is not positive definite");
    double d = 1.0;
    for (int i = 0; i < A.n; ++i) d *= L(i, i) * L(i, i);
    return d;
}

Vec forward_substitute(const SymMat& L, const Vec& b) {
    const int n = L.n;
    Vec y(n);
    for (int i = 0; i < n; ++i) {
        double s = b[i];
        for (int k = 0; k < i; ++k) s -= L(i, k) * y[k];
        y[i] = s / L(i, i);
    }
    return y;
}

Vec backward_substitute_transposed(const SymMat& L, const Vec& b) {
    const int n = L.n;
    Vec x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int k = i + 1; k < n; ++k) s -= L(k, i) * x[k];
        x[i] = s / L(i, i);
    }
    return x;
}

Vec solve_positive_definite(const SymMat& A, const Vec& b) {
    SymMat L;
    if (!cholesky(A, L)) throw NotPositiveDefinite("solve: matrix is not positive definite");
    return backward_substitute_transposed(L, forward_substitute(L, b));
}

}  // namespace concentra
