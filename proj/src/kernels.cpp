#include "concentra/kernels.hpp"

#include <cmath>
#include <limits>

#include "concentra/parallel.hpp"

namespace concentra::kernels {

namespace {

ScanResult merge(const ScanResult& a, const ScanResult& b) {
    if (b.index < 0) return a;
    if (a.index < 0) return b;
    if (b.value < a.value || (b.value == a.value && b.index < a.index)) return b;
    return a;
}

}  // namespace

ScanResult min_scan_serial(const PointFn& f, const std::vector<Vec>& points) {
    ScanResult r;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(points.size()); ++i) {
        const double v = f(points[i]);
        if (r.index < 0 || v < r.value) r = {v, i};
    }
    return r;
}

ScanResult min_scan(const PointFn& f, const std::vector<Vec>& points) {
    const std::int64_t n = static_cast<std::int64_t>(points.size());
    ScanResult global;
#pragma omp parallel num_threads(max_threads())
    {
        ScanResult local;
#pragma omp for nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const double v = f(points[i]);
            if (local.index < 0 || v < local.value || (v == local.value && i < local.index))
                local = {v, i};
        }
#pragma omp critical
        global = merge(global, local);
    }
    return global;
}

ScanResult masked_min_scan_serial(const PointFn& f, const std::function<bool(const Vec&)>& mask,
                                  const std::vector<Vec>& points) {
    ScanResult r;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(points.size()); ++i) {
        if (!mask(points[i])) continue;
        const double v = f(points[i]);
        if (r.index < 0 || v < r.value) r = {v, i};
    }
    return r;
}

ScanResult masked_min_scan(const PointFn& f, const std::function<bool(const Vec&)>& mask,
                           const std::vector<Vec>& points) {
    const std::int64_t n = static_cast<std::int64_t>(points.size());
    ScanResult global;
#pragma omp parallel num_threads(max_threads())
    {
        ScanResult local;
#pragma omp for nowait
        for (std::int64_t i = 0; i < n; ++i) {
            if (!mask(points[i])) continue;
            const double v = f(points[i]);
            if (local.index < 0 || v < local.value || (v == local.value && i < local.index))
                local = {v, i};
        }
#pragma omp critical
        global = merge(global, local);
    }
    return global;
}

double norm_pow(const Vec& a, const Vec& b, int p) {
    double s = 0.0;
    for (size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    const double nrm = std::sqrt(s);
    if (p == 1) return nrm;
    if (p == 2) return s;
    return std::pow(nrm, p);
}

std::vector<double> cost_matrix_serial(const std::vector<Vec>& a, const std::vector<Vec>& b, int p) {
    const std::int64_t na = static_cast<std::int64_t>(a.size());
    const std::int64_t nb = static_cast<std::int64_t>(b.size());
    std::vector<double> c(static_cast<size_t>(na) * nb);
    for (std::int64_t i = 0; i < na; ++i)
        for (std::int64_t j = 0; j < nb; ++j) c[i * nb + j] = norm_pow(a[i], b[j], p);
    return c;
}

std::vector<double> cost_matrix(const std::vector<Vec>& a, const std::vector<Vec>& b, int p) {
    const std::int64_t na = static_cast<std::int64_t>(a.size());
    const std::int64_t nb = static_cast<std::int64_t>(b.size());
    std::vector<double> c(static_cast<size_t>(na) * nb);
#pragma omp parallel for num_threads(max_threads()) schedule(static)
    for (std::int64_t i = 0; i < na; ++i)
        for (std::int64_t j = 0; j < nb; ++j) c[i * nb + j] = norm_pow(a[i], b[j], p);
    return c;
}

std::vector<Vec> fill_batch_serial(const std::function<Vec(std::int64_t)>& fill, std::int64_t count) {
    std::vector<Vec> out(count);
    for (std::int64_t i = 0; i < count; ++i) out[i] = fill(i);
    return out;
}

std::vector<Vec> fill_batch(const std::function<Vec(std::int64_t)>& fill, std::int64_t count) {
    std::vector<Vec> out(count);
#pragma omp parallel for num_threads(max_threads()) schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) out[i] = fill(i);
    return out;
}

std::vector<Vec> quasi_random_points(int dim, std::int64_t count, const Vec& lo, const Vec& hi) {
    // Generalized golden-ratio sequence: alpha_k = phi_d^-(k+1) with phi_d the
    // root of x^(d+1) = x + 1; equidistributes well for small d.
    double phi = 2.0;
    for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (dim + 1));
    Vec alpha(dim);
    double a = 1.0;
    for (int k = 0; k < dim; ++k) {
        a /= phi;
        alpha[k] = a;
    }
    std::vector<Vec> pts(count, Vec(dim));
#pragma omp parallel for num_threads(max_threads()) schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        for (int k = 0; k < dim; ++k) {
            double u = 0.5 + alpha[k] * static_cast<double>(i + 1);
            u -= std::floor(u);
            pts[i][k] = lo[k] + (hi[k] - lo[k]) * u;
        }
    }
    return pts;
}

}  // namespace concentra::kernels
