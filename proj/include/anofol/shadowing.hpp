#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "anofol/certified.hpp"
#include "anofol/foliation.hpp"
#include "anofol/lift.hpp"
#include "anofol/vec.hpp"

namespace anofol {

// The shadowing radius C used throughout the construction. Any
// C >= C0 / (1 - lambda) makes the depth-n candidate sets nested; the
// constant is chosen strictly above that threshold by a relative margin.
struct shadow_constant {
    double value = 0.0;
    certified_value c0_bound;
    double margin = 0.0;
};

inline shadow_constant choose_shadow_constant(certified_value c0_bound, double lambda,
                                              double margin) {
    if (margin <= 0.0) throw std::invalid_argument("shadow constant margin must be positive");
    if (!(lambda >= 0.0 && lambda < 1.0))
        throw std::invalid_argument("lambda must lie in [0,1)");
    shadow_constant sc;
    sc.c0_bound = c0_bound;
    sc.margin = margin;
    sc.value = c0_bound.upper_bound() / (1.0 - lambda) * (1.0 + margin);
    return sc;
}

// Interval of candidate transverse leaf coordinates at a given depth.
//
// For the stable kind, these are the coordinates u0 whose model leaf, pushed
// forward n times, still C-shadows the orbit of x:
//   |mu^n u0 - coord_u(f^n(x))| <= C,
// an interval of width 2 C lambda^n centered at mu^{-n} coord_u(f^n(x)).
// The unstable kind is symmetric with coord_s along the backward orbit.
// For fixed x the intervals are nested across n whenever the shadow
// constant is large enough, and their intersection is a single coordinate:
// the generalized leaf through x.
struct leaf_interval {
    int depth = 0;
    double lo = 0.0;
    double hi = 0.0;
    double center = 0.0;

    double width() const { return hi - lo; }
    bool contains(double u, double slack = 0.0) const {
        return u >= lo - slack && u <= hi + slack;
    }
    bool contains(const leaf_interval& inner, double slack = 0.0) const {
        return inner.lo >= lo - slack && inner.hi <= hi + slack;
    }
};

namespace detail {

inline vec2 orbit_step(const perturbed_lift& lift, vec2 z, leaf_kind kind) {
    return kind == leaf_kind::stable ? lift.apply(z) : lift.apply_inverse(z);
}

inline double transverse_coord(const perturbed_lift& lift, vec2 z, leaf_kind kind) {
    return kind == leaf_kind::stable ? coord_u(lift.frame(), z) : coord_s(lift.frame(), z);
}

}  // namespace detail

inline leaf_interval leaf_interval_at(const perturbed_lift& lift, const shadow_constant& sc,
                                      vec2 x, int n, leaf_kind kind = leaf_kind::stable) {
    if (n < 0) throw std::invalid_argument("leaf interval depth must be >= 0");
    vec2 z = x;
    for (int i = 0; i < n; ++i) z = detail::orbit_step(lift, z, kind);
    const double coord = detail::transverse_coord(lift, z, kind);
    const double scale = std::pow(lift.frame().lambda, n);
    leaf_interval iv;
    iv.depth = n;
    iv.lo = scale * (coord - sc.value);
    iv.hi = scale * (coord + sc.value);
    iv.center = scale * coord;
    return iv;
}

// The generalized leaf through a point, identified by its transverse
// coordinate together with a certified error radius. depth records how far
// the orbit was followed to certify the radius.
struct generalized_leaf_id {
    leaf_kind kind = leaf_kind::stable;
    certified_value coord;
    int depth = 0;
};

// Certified transverse coordinate of the generalized stable (unstable) leaf
// through x. The true coordinate lies in the nested candidate interval at
// every depth, so the midpoint of the depth-n* interval is within
// C lambda^{n*} of it; n* is the smallest depth driving that radius below
// the requested tolerance.
inline generalized_leaf_id generalized_leaf(const perturbed_lift& lift,
                                            const shadow_constant& sc, vec2 x, double tol,
                                            leaf_kind kind = leaf_kind::stable) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    const eigen_frame& f = lift.frame();
    int depth = 0;
    if (sc.value > tol) {
        depth = static_cast<int>(std::ceil(std::log(sc.value / tol) / std::log(f.mu)));
        if (depth < 0) depth = 0;
        // ceil in exact arithmetic; nudge until the computed radius complies
        while (sc.value * std::pow(f.lambda, depth) > tol) {
            ++depth;
            if (depth > lift.max_orbit_depth()) break;
        }
    }
    if (depth > lift.max_orbit_depth())
        throw depth_overflow("leaf coordinate needs depth " + std::to_string(depth) +
                             ", limit is " + std::to_string(lift.max_orbit_depth()) +
                             " (tolerance too small)");
    vec2 z = x;
    for (int i = 0; i < depth; ++i) z = detail::orbit_step(lift, z, kind);
    const double scale = std::pow(f.lambda, depth);
    generalized_leaf_id id;
    id.kind = kind;
    id.coord.value = scale * detail::transverse_coord(lift, z, kind);
    id.coord.error_radius = sc.value * scale;
    id.depth = depth;
    return id;
}

inline generalized_leaf_id theta_s(const perturbed_lift& lift, const shadow_constant& sc,
                                   vec2 x, double tol) {
    return generalized_leaf(lift, sc, x, tol, leaf_kind::stable);
}

inline generalized_leaf_id theta_u(const perturbed_lift& lift, const shadow_constant& sc,
                                   vec2 x, double tol) {
    return generalized_leaf(lift, sc, x, tol, leaf_kind::unstable);
}

// Finite-depth membership test: x belongs to the depth-N approximation of
// the generalized leaf over the model leaf L when the orbit of x C-shadows
// the model orbit of L for all 0 <= n <= N. Monotone in N.
inline bool membership_depth(const perturbed_lift& lift, const shadow_constant& sc, vec2 x,
                             const leaf_coord& leaf, int max_depth) {
    if (max_depth < 0) throw std::invalid_argument("membership depth must be >= 0");
    vec2 z = x;
    double scale = 1.0;  // mu^n
    for (int n = 0; n <= max_depth; ++n) {
        if (n > 0) {
            z = detail::orbit_step(lift, z, leaf.kind);
            scale *= lift.frame().mu;
        }
        const double coord = detail::transverse_coord(lift, z, leaf.kind);
        if (std::fabs(coord - scale * leaf.value) > sc.value) return false;
    }
    return true;
}

// The pair (stable coordinate, unstable coordinate): the coordinates of the
// leaf-space semiconjugacy. It intertwines f with the diagonal model action
// (mu t, lambda s) and shifts by (nu_u(k), nu_s(k)) under deck translations.
inline std::pair<certified_value, certified_value> semiconjugacy(const perturbed_lift& lift,
                                                                 const shadow_constant& sc,
                                                                 vec2 x, double tol) {
    return {generalized_leaf(lift, sc, x, tol, leaf_kind::stable).coord,
            generalized_leaf(lift, sc, x, tol, leaf_kind::unstable).coord};
}

// One step of the pseudo-distance track between two forward orbits.
struct divergence_sample {
    int n = 0;
    double du = 0.0;
    double ds = 0.0;
    double d = 0.0;
};

// Pseudo-distance tracks n -> (d_u, d_s, d)(f^n(x), f^n(y)), the brute-force
// oracle for stable-set classification.
//
// The difference of the two orbits is propagated in its transverse
// coordinates,
//   alpha <- mu alpha + nu_u(p(u) - p(v)),   beta <- lambda beta + nu_s(...),
// with u, v the mod-1 reduced orbits, all in extended precision. This keeps
// the stable reading O(1) throughout. The alternatives fail: subtracting
// plane orbits loses everything once coordinates pass the ulp scale of the
// stable displacement (n ~ 35), and projecting a propagated difference
// vector through the double-precision covectors leaks
// |covector rounding| * mu^n * d_u into the stable reading, which is O(1)
// by n = 40.
inline std::vector<divergence_sample> orbit_divergence(const perturbed_lift& lift, vec2 x,
                                                       vec2 y, int steps) {
    if (steps < 0) throw std::invalid_argument("divergence steps must be >= 0");
    if (steps > lift.max_orbit_depth())
        throw depth_overflow("divergence depth " + std::to_string(steps) + " exceeds limit " +
                             std::to_string(lift.max_orbit_depth()));
    const eigen_frame& f = lift.frame();
    const mat2 a = lift.model();
    const perturbation& p = lift.displacement();

    const long double a11 = a.a, a12 = a.b, a21 = a.c, a22 = a.d;
    const long double nux = f.nu_u.x, nuy = f.nu_u.y;
    const long double nsx = f.nu_s.x, nsy = f.nu_s.y;
    const long double tr = a11 + a22;
    const long double mu_x = 0.5L * (tr + std::sqrt(tr * tr - 4.0L));
    const long double lambda_x = 1.0L / mu_x;

    const long double wx = static_cast<long double>(x.x) - static_cast<long double>(y.x);
    const long double wy = static_cast<long double>(x.y) - static_cast<long double>(y.y);
    long double alpha = nux * wx + nuy * wy;
    long double beta = nsx * wx + nsy * wy;
    long double ux = x.x, uy = x.y, vx = y.x, vy = y.y;

    std::vector<divergence_sample> track;
    track.reserve(static_cast<std::size_t>(steps) + 1);
    for (int n = 0; n <= steps; ++n) {
        divergence_sample s;
        s.n = n;
        s.du = static_cast<double>(std::fabs(alpha));
        s.ds = static_cast<double>(std::fabs(beta));
        s.d = s.du + s.ds;
        track.push_back(s);
        if (n == steps) break;

        const auto pu = p.evaluate_ld(ux, uy);
        const auto pv = p.evaluate_ld(vx, vy);
        const long double dpx = pu.first - pv.first;
        const long double dpy = pu.second - pv.second;
        alpha = mu_x * alpha + (nux * dpx + nuy * dpy);
        beta = lambda_x * beta + (nsx * dpx + nsy * dpy);

        long double tx = a11 * ux + a12 * uy + pu.first;
        long double ty = a21 * ux + a22 * uy + pu.second;
        ux = tx - std::floor(tx);
        uy = ty - std::floor(ty);
        tx = a11 * vx + a12 * vy + pv.first;
        ty = a21 * vx + a22 * vy + pv.second;
        vx = tx - std::floor(tx);
        vy = ty - std::floor(ty);
    }
    return track;
}

// Grid points of the window whose depth-N membership test passes: a sampled
// picture of the generalized leaf band around the model leaf.
inline std::vector<vec2> leaf_sample(const perturbed_lift& lift, const shadow_constant& sc,
                                     const leaf_coord& leaf, const rect& window, int resolution,
                                     int depth) {
    if (resolution < 2) throw std::invalid_argument("leaf sample resolution must be >= 2");
    if (!window.valid()) throw std::invalid_argument("leaf sample window is empty");
    std::vector<vec2> hits;
    const double hx = (window.x_max - window.x_min) / static_cast<double>(resolution - 1);
    const double hy = (window.y_max - window.y_min) / static_cast<double>(resolution - 1);
    for (int i = 0; i < resolution; ++i) {
        for (int j = 0; j < resolution; ++j) {
            const vec2 x{window.x_min + static_cast<double>(i) * hx,
                         window.y_min + static_cast<double>(j) * hy};
            if (membership_depth(lift, sc, x, leaf, depth)) hits.push_back(x);
        }
    }
    return hits;
}

}  // namespace anofol
