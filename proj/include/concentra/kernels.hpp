#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "concentra/linalg.hpp"

namespace concentra::kernels {

// Data-parallel inner loops, each with an OpenMP variant and a serial
// reference. Both variants produce bit-identical results (reductions are
// order-independent or accumulated per fixed slot), which the tests assert.

struct ScanResult {
    double value = 0.0;
    std::int64_t index = -1;
};

using PointFn = std::function<double(const Vec&)>;

/// Minimum of f over a point list; index is the first attaining point.
ScanResult min_scan(const PointFn& f, const std::vector<Vec>& points);
ScanResult min_scan_serial(const PointFn& f, const std::vector<Vec>& points);

/// Minimum of f over points where mask(point) is true; index -1 if none pass.
ScanResult masked_min_scan(const PointFn& f, const std::function<bool(const Vec&)>& mask,
                           const std::vector<Vec>& points);
ScanResult masked_min_scan_serial(const PointFn& f, const std::function<bool(const Vec&)>& mask,
                                  const std::vector<Vec>& points);

/// Dense cost matrix c[i*nb + j] = ||a_i - b_j||^p.
std::vector<double> cost_matrix(const std::vector<Vec>& a, const std::vector<Vec>& b, int p);
std::vector<double> cost_matrix_serial(const std::vector<Vec>& a, const std::vector<Vec>& b, int p);

/// Fill `count` slots with fill(slot); each slot independent.
std::vector<Vec> fill_batch(const std::function<Vec(std::int64_t)>& fill, std::int64_t count);
std::vector<Vec> fill_batch_serial(const std::function<Vec(std::int64_t)>& fill, std::int64_t count);

/// Low-discrepancy points in a box (additive-recurrence / Kronecker sequence).
std::vector<Vec> quasi_random_points(int dim, std::int64_t count, const Vec& lo, const Vec& hi);

double norm_pow(const Vec& a, const Vec& b, int p);

}  // namespace concentra::kernels
