#include "concentra/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "concentra/errors.hpp"

namespace concentra::quad {

namespace {

GLRule compute_gl(int order) {
    GLRule r;
    r.x.resize(order);
    r.w.resize(order);
    // Newton iteration on Legendre polynomials, Chebyshev initial guesses.
    for (int i = 0; i < order; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= order; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = order * (x * p1 - p0) / (x * x - 1.0);
        r.x[order - 1 - i] = x;
        r.w[order - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

std::mutex g_rule_mutex;

double panel_gl(const std::function<double(double)>& f, double a, double b, const GLRule& rule,
                long& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (size_t i = 0; i < rule.x.size(); ++i) s += rule.w[i] * f(mid + half * rule.x[i]);
    evals += static_cast<long>(rule.x.size());
    return s * half;
}

struct AdaptiveState {
    const std::function<double(double)>* f;
    const GLRule* rule;
    double tol;
    double span;
    int max_depth;
    int budget;
    double value = 0.0;
    double error = 0.0;
    long evals = 0;
    bool exhausted = false;
};

// Depth-first refinement; left child first, so the panel visit order (and the
// summation order) is independent of intermediate results' magnitudes.
void refine(AdaptiveState& st, double a, double b, double coarse, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = panel_gl(*st.f, a, mid, *st.rule, st.evals);
    const double right = panel_gl(*st.f, mid, b, *st.rule, st.evals);
    const double fine = left + right;
    const double err = std::abs(fine - coarse);
    const double local_tol = st.tol * ((b - a) / st.span);
    if (err <= local_tol || depth >= st.max_depth || st.budget <= 0) {
        if (st.budget <= 0 && err > local_tol) st.exhausted = true;
        st.value += fine;
        st.error += err;
        return;
    }
    st.budget -= 2;
    refine(st, a, mid, left, depth + 1);
    refine(st, mid, b, right, depth + 1);
}

}  // namespace

const GLRule& gauss_legendre(int order) {
    static std::map<int, GLRule> cache;
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gl(order)).first;
    return it->second;
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     std::vector<double> breakpoints, const Options& opt) {
    QuadResult res;
    if (!(b > a)) return res;
    const GLRule& rule = gauss_legendre(opt.panel_order);

    breakpoints.push_back(a);
    breakpoints.push_back(b);
    std::sort(breakpoints.begin(), breakpoints.end());
    std::vector<double> cuts;
    for (double c : breakpoints) {
        if (c < a || c > b) continue;
        if (cuts.empty() || c - cuts.back() > 1e-14 * (1.0 + std::abs(c))) cuts.push_back(c);
    }
    if (cuts.size() < 2) cuts = {a, b};
    if (cuts.back() != b) cuts.back() = b;

    // Rough first pass to set the relative-tolerance scale.
    long rough_evals = 0;
    double rough = 0.0;
    std::vector<double> coarse(cuts.size() - 1);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        coarse[i] = panel_gl(f, cuts[i], cuts[i + 1], rule, rough_evals);
        rough += coarse[i];
    }

    AdaptiveState st;
    st.f = &f;
    st.rule = &rule;
    st.tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(rough));
    st.span = b - a;
    st.max_depth = opt.max_depth;
    st.budget = opt.max_intervals;
    st.evals = rough_evals;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) refine(st, cuts[i], cuts[i + 1], coarse[i], 0);

    if (st.exhausted && st.error > 10.0 * st.tol)
        throw QuadratureFailure("adaptive quadrature stalled before reaching tolerance");
    if (!std::isfinite(st.value)) throw NonFiniteValue("quadrature produced a non-finite value");
    return {st.value, st.error, st.evals};
}

std::vector<Interval> merge_intervals(std::vector<Interval> s) {
    std::vector<Interval> out;
    std::erase_if(s, [](const Interval& iv) { return !(iv.second > iv.first); });
    std::sort(s.begin(), s.end());
    for (const auto& iv : s) {
        if (!out.empty() && iv.first <= out.back().second)
            out.back().second = std::max(out.back().second, iv.second);
        else
            out.push_back(iv);
    }
    return out;
}

std::vector<Interval> complement_intervals(const std::vector<Interval>& s, double lo, double hi) {
    std::vector<Interval> out;
    double cur = lo;
    for (const auto& iv : s) {
        const double l = std::max(iv.first, lo);
        const double r = std::min(iv.second, hi);
        if (r <= l) continue;
        if (l > cur) out.push_back({cur, l});
        cur = std::max(cur, r);
    }
    if (cur < hi) out.push_back({cur, hi});
    return out;
}

QuadResult integrate_nested(const std::function<double(const Vec&)>& f, const NestedSpec& spec) {
    QuadResult total;

    std::function<double(int, Vec&)> level = [&](int axis, Vec& point) -> double {
        Vec prefix(point.begin(), point.begin() + axis);
        const auto ivs = spec.sections(axis, prefix);
        std::vector<double> brk;
        if (spec.breakpoints) brk = spec.breakpoints(axis, prefix);
        const Options& opt = (axis == 0) ? spec.outer : spec.inner;
        double sum = 0.0;
        for (const auto& iv : ivs) {
            auto g = [&](double x) -> double {
                point[axis] = x;
                if (axis + 1 == spec.dim) return f(point);
                return level(axis + 1, point);
            };
            const QuadResult r = integrate(g, iv.first, iv.second, brk, opt);
            sum += r.value;
            if (axis == 0) {
                total.error += r.error;
                total.evals += r.evals;
            }
        }
        return sum;
    };

    Vec point(spec.dim, 0.0);
    total.value = level(0, point);
    return total;
}

const SurfaceRule& circle_rule(int m) {
    static std::map<int, SurfaceRule> cache;
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto it = cache.find(m);
    if (it == cache.end()) {
        SurfaceRule r;
        r.nodes.reserve(m);
        r.weights.assign(m, 2.0 * std::numbers::pi / m);
        for (int i = 0; i < m; ++i) {
            const double th = 2.0 * std::numbers::pi * i / m;
            r.nodes.push_back({std::cos(th), std::sin(th)});
        }
        it = cache.emplace(m, std::move(r)).first;
    }
    return it->second;
}

const SurfaceRule& sphere3_rule() {
    static SurfaceRule r = [] {
        SurfaceRule s;
        const GLRule& gl = gauss_legendre(16);
        const int mphi = 32;
        for (size_t i = 0; i < gl.x.size(); ++i) {
            const double z = gl.x[i];
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            for (int j = 0; j < mphi; ++j) {
                const double phi = 2.0 * std::numbers::pi * j / mphi;
                s.nodes.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
                s.weights.push_back(gl.w[i] * 2.0 * std::numbers::pi / mphi);
            }
        }
        return s;
    }();
    return r;
}

const SurfaceRule& sphere_rule(int ambient_dim) {
    if (ambient_dim == 2) return circle_rule();
    if (ambient_dim == 3) return sphere3_rule();
    throw UnsupportedDensity("sphere quadrature supported for ambient dimension 2 and 3 only");
}

}  // namespace concentra::quad
