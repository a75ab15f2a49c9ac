#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "concentra/linalg.hpp"

namespace concentra {

/// A nonnegative scalar field on R^d with optional analytic derivatives.
/// Houses both the potential and the reference density roles.
struct ScalarField {
    int dimension = 0;
    std::function<double(const Vec&)> evaluate;
    std::function<Vec(const Vec&)> gradient;       // optional (may be empty)
    std::function<SymMat(const Vec&)> hessian;     // optional (may be empty)
};

struct FinitePoint {
    Vec location;
};

struct EmbeddedSphere {
    Vec center;
    double radius = 1.0;
};

using Component = std::variant<FinitePoint, EmbeddedSphere>;

int component_dim(const Component& c, int ambient_dim);
/// Representative support point (the point itself / a point on the sphere).
Vec component_anchor(const Component& c);
/// Euclidean distance from x to the component's support.
double component_distance(const Component& c, const Vec& x);

struct MinimalSetSpec {
    std::vector<Component> components;
};

struct Box {
    Vec lo, hi;
    bool contains(const Vec& x, double margin = 0.0) const;
};

/// The triple (potential, reference density, minimal set) plus the tubular
/// radius and the quadrature domain; generates mu_n for any n.
struct GibbsFamily {
    std::string name;
    ScalarField potential;   // >= 0, zero exactly on the minimal set
    ScalarField reference;   // strictly positive density
    MinimalSetSpec minimal_set;
    double epsilon = 0.0;
    Box domain;
    bool integrable_tails = true;  // user-asserted tail growth (integrability)

    int dimension() const { return potential.dimension; }
    /// max over components of the intrinsic dimension.
    int top_dimension() const;
    double unnormalized_density(const Vec& x, double n) const;
};

/// Finite-difference gradient (central, h = 1e-6 scale-adjusted).
Vec gradient_at(const ScalarField& field, const Vec& x);

/// Hessian at x: analytic if present, otherwise nested central differences
/// with h = max(1e-5, 1e-5*|x_j|) per coordinate; symmetrized as (H+H^T)/2.
/// Throws NonFiniteValue if any evaluation is NaN/inf.
SymMat hessian_at(const ScalarField& field, const Vec& x);

/// True iff Cholesky succeeds with all pivots > 1e-12.
bool check_positive_definite(const SymMat& H);

struct TailCheckResult {
    bool passed = false;
    double observed_infimum = 0.0;
    long points_checked = 0;
};

/// Falsification sweep of the tail condition: evaluates the potential on a
/// deterministic low-discrepancy grid over the domain minus delta-collars of
/// all components. A pass means no violation was found at this resolution.
/// Throws ResolutionTooCoarse if fewer than 10 grid points survive.
TailCheckResult check_tail_condition(const GibbsFamily& family, double delta,
                                     long grid_resolution);

/// Outward unit normal of an embedded sphere at a surface point.
/// Throws NotOnManifold when u is farther than 1e-8 from the surface.
Vec normal_frame(const EmbeddedSphere& sphere, const Vec& u);

struct ValidationIssue {
    std::string check;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Structural checks: dimensions coherent, potential zero on the declared
/// set, epsilon below the injectivity bound, tubes pairwise disjoint, domain
/// margins, positive-definite normal Hessians, quasi-random minimum scan.
ValidationReport validate_family(const GibbsFamily& family, long scan_points = 100000);

/// Load a family from the JSON problem document format.
GibbsFamily load_family_json(const std::string& path);
GibbsFamily parse_family_json(const std::string& text);

}  // namespace concentra
