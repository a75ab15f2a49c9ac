#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "concentra/linalg.hpp"

namespace concentra::quad {

/// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
struct GLRule {
    std::vector<double> x, w;
};
const GLRule& gauss_legendre(int order);

struct Options {
    double abs_tol = 1e-12;
    double rel_tol = 1e-11;
    int max_intervals = 20000;
    int max_depth = 52;
    int panel_order = 15;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    long evals = 0;
};

/// Adaptive bisection with fixed-order Gauss-Legendre panels. Initial panels
/// come from the sorted breakpoints clipped to [a, b]; refinement order is
/// deterministic (depth-first, left child first).
/// Throws QuadratureFailure when the interval budget is exhausted while the
/// error estimate still exceeds 10x the effective tolerance.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     std::vector<double> breakpoints = {}, const Options& opt = {});

using Interval = std::pair<double, double>;

/// Sorted disjoint union of a set of (possibly overlapping) intervals.
std::vector<Interval> merge_intervals(std::vector<Interval> s);
/// Complement of a sorted disjoint set within [lo, hi].
std::vector<Interval> complement_intervals(const std::vector<Interval>& s, double lo, double hi);

/// Nested adaptive quadrature over a d-dimensional region described by
/// per-axis sections: `sections(axis, prefix)` yields the admissible
/// intervals of coordinate `axis` given the outer coordinates `prefix`.
struct NestedSpec {
    int dim = 1;
    std::function<std::vector<Interval>(int axis, const Vec& prefix)> sections;
    std::function<std::vector<double>(int axis, const Vec& prefix)> breakpoints;  // optional
    Options outer;
    Options inner;
};
QuadResult integrate_nested(const std::function<double(const Vec&)>& f, const NestedSpec& spec);

/// Fixed quadrature design on the unit sphere S^{d-1}; weights sum to the
/// surface measure (2*pi for d=2, 4*pi for d=3).
struct SurfaceRule {
    std::vector<Vec> nodes;
    std::vector<double> weights;
};
const SurfaceRule& circle_rule(int m = 512);
const SurfaceRule& sphere3_rule();
/// Dispatch on ambient dimension; throws UnsupportedDensity for d > 3.
const SurfaceRule& sphere_rule(int ambient_dim);

}  // namespace concentra::quad
