#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <cmath>
#include <functional>

#include "anofol/anofol.hpp"

namespace testsupport {

// The reference instance: [[2,1],[1,1]] with (0.05 sin 2 pi x2, 0.03 sin 2 pi x1).
inline anofol::run_config reference_config() { return anofol::run_config{}; }

inline anofol::run_config unperturbed_config() {
    anofol::run_config cfg;
    cfg.terms.clear();
    return cfg;
}

inline anofol::perturbed_lift reference_lift() { return anofol::make_lift(reference_config()); }

// Bisection root-finder, used as the independent oracle for eigenvalue
// computations. Assumes fn changes sign on [lo, hi].
inline double bisect_root(const std::function<double(double)>& fn, double lo, double hi) {
    double flo = fn(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = fn(mid);
        if ((flo <= 0.0) == (fmid <= 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Largest root of t^2 - tr t + 1 via bisection on [1, tr].
inline double dilatation_oracle(double tr) {
    return bisect_root([tr](double t) { return t * t - tr * t + 1.0; }, 1.0, tr);
}

// Brute-force grid maximum of both displacement distances, straight from
// the definitions: no closed forms, no shadowing_constant internals. The
// backward defect at x = f(y) equals dist(y, A^{-1} f(y)), so sweeping y
// over the grid covers both directions without inverse solves.
inline double displacement_grid_oracle(const anofol::perturbed_lift& lift, int res) {
    using namespace anofol;
    const eigen_frame& f = lift.frame();
    const mat2 a = lift.model();
    const mat2 a_inv = lift.model_inverse();
    double worst = 0.0;
    for (int i = 0; i < res; ++i) {
        for (int j = 0; j < res; ++j) {
            const vec2 y{static_cast<double>(i) / res, static_cast<double>(j) / res};
            const vec2 fy = lift.apply(y);
            worst = std::max(worst, dist(f, fy, a * y));
            worst = std::max(worst, dist(f, y, a_inv * fy));
        }
    }
    return worst;
}

// Relative fixed point: the unique x with f(x) = x + m, solving
// (A - I) x = m - p(x) by contraction, independent of apply_inverse.
// m = (0,0) gives the unique plane fixed point of the lift.
inline anofol::vec2 relative_fixed_point(const anofol::perturbed_lift& lift, anofol::ivec2 m) {
    const anofol::mat2 a = lift.model();
    const anofol::mat2 ai{a.a - 1.0, a.b, a.c, a.d - 1.0};
    const double dd = anofol::det(ai);
    const anofol::mat2 inv{ai.d / dd, -ai.b / dd, -ai.c / dd, ai.a / dd};
    anofol::vec2 x{0.0, 0.0};
    for (int i = 0; i < 400; ++i)
        x = inv * (anofol::to_vec2(m) - lift.displacement().evaluate(x));
    return x;
}

// A point on the same generalized stable leaf as x, found by bisecting the
// computed coordinate along a transversal through x + v_s/2. With the tight
// construction tolerance the true coordinates agree to ~3 tol.
inline anofol::vec2 same_leaf_partner(const anofol::perturbed_lift& lift,
                                      const anofol::shadow_constant& sc, anofol::vec2 x,
                                      double tol) {
    using namespace anofol;
    const eigen_frame& f = lift.frame();
    const double target = generalized_leaf(lift, sc, x, tol).coord.value;
    const vec2 base = x + 0.5 * f.v_s;
    auto offset = [&](double t) {
        return generalized_leaf(lift, sc, base + t * f.nu_u, tol).coord.value - target;
    };
    double lo = -0.15, hi = 0.15;
    double f_lo = offset(lo);
    while ((f_lo <= 0.0) == (offset(hi) <= 0.0) && hi < 2.0) {
        lo *= 2.0;
        hi *= 2.0;
        f_lo = offset(lo);
    }
    for (int i = 0; i < 120; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = offset(mid);
        if ((f_mid <= 0.0) == (f_lo <= 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return base + (0.5 * (lo + hi)) * f.nu_u;
}

}  // namespace testsupport
