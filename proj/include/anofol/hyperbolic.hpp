#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "anofol/vec.hpp"

namespace anofol {

struct not_hyperbolic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer matrix of the linear model map. Requiring determinant 1 and trace
// >= 3 gives two distinct positive real eigenvalues mu > 1 > 1/mu with
// irrational eigendirections, so both eigenlines project to dense leaves on
// the torus.
struct hyperbolic_matrix {
    std::int64_t a, b, c, d;

    std::int64_t determinant() const { return a * d - b * c; }
    std::int64_t trace() const { return a + d; }

    mat2 to_mat2() const {
        return {static_cast<double>(a), static_cast<double>(b),
                static_cast<double>(c), static_cast<double>(d)};
    }

    // Exact inverse; valid because the determinant is 1.
    mat2 inverse_mat2() const {
        return {static_cast<double>(d), static_cast<double>(-b),
                static_cast<double>(-c), static_cast<double>(a)};
    }
};

inline hyperbolic_matrix make_hyperbolic_matrix(std::int64_t a, std::int64_t b,
                                                std::int64_t c, std::int64_t d) {
    hyperbolic_matrix m{a, b, c, d};
    if (m.determinant() != 1)
        throw not_hyperbolic("matrix determinant must be 1, got " +
                             std::to_string(m.determinant()));
    if (m.trace() < 3)
        throw not_hyperbolic("matrix trace must be >= 3, got " +
                             std::to_string(m.trace()));
    return m;
}

// Expanding/contracting eigendata of the model map.
//
//   mu     : expansion factor (the dilatation), larger root of t^2 - tr t + 1
//   lambda : 1/mu, the contraction rate
//   v_u,v_s: unit eigenvectors (unstable/stable directions)
//   nu_u   : unit left eigencovector, nu_u(A x) = mu * nu_u(x)
//   nu_s   : unit left eigencovector, nu_s(A x) = lambda * nu_s(x)
//
// nu_u annihilates v_s and nu_s annihilates v_u, so nu_u is constant along
// stable leaves and serves as the stable-leaf coordinate (and vice versa).
// Covectors are normalized to unit Euclidean norm, which makes the induced
// pseudo-distances comparable to Euclidean distance independently of the
// matrix. Signs are fixed so that nu_u(v_u) > 0 and nu_s(v_s) > 0.
struct eigen_frame {
    double mu = 0.0;
    double lambda = 0.0;
    vec2 v_u, v_s;
    vec2 nu_u, nu_s;
};

namespace detail {

inline vec2 normalized_eigvec(double e1x, double e1y, double e2x, double e2y) {
    // Two candidate rows of the eigen-equation; pick the better conditioned.
    vec2 v = {e1x, e1y};
    vec2 w = {e2x, e2y};
    vec2 best = norm(v) >= norm(w) ? v : w;
    const double n = norm(best);
    return {best.x / n, best.y / n};
}

}  // namespace detail

inline eigen_frame eigenframe(const hyperbolic_matrix& m) {
    if (m.determinant() != 1)
        throw not_hyperbolic("matrix determinant must be 1, got " +
                             std::to_string(m.determinant()));
    if (m.trace() < 3)
        throw not_hyperbolic("matrix trace must be >= 3, got " +
                             std::to_string(m.trace()));

    eigen_frame f;
    const double t = static_cast<double>(m.trace());
    const double disc = std::sqrt(t * t - 4.0);
    f.mu = 0.5 * (t + disc);
    f.lambda = 1.0 / f.mu;

    const double a = static_cast<double>(m.a), b = static_cast<double>(m.b);
    const double c = static_cast<double>(m.c), d = static_cast<double>(m.d);

    // Right eigenvectors: rows of (A - t I) give (b, t-a) and (t-d, c).
    f.v_u = detail::normalized_eigvec(b, f.mu - a, f.mu - d, c);
    f.v_s = detail::normalized_eigvec(b, f.lambda - a, f.lambda - d, c);
    // Left eigencovectors are right eigenvectors of the transpose.
    f.nu_u = detail::normalized_eigvec(c, f.mu - a, f.mu - d, b);
    f.nu_s = detail::normalized_eigvec(c, f.lambda - a, f.lambda - d, b);

    if (f.v_u.x < 0.0 || (f.v_u.x == 0.0 && f.v_u.y < 0.0)) f.v_u = -f.v_u;
    if (f.v_s.x < 0.0 || (f.v_s.x == 0.0 && f.v_s.y < 0.0)) f.v_s = -f.v_s;
    if (dot(f.nu_u, f.v_u) < 0.0) f.nu_u = -f.nu_u;
    if (dot(f.nu_s, f.v_s) < 0.0) f.nu_s = -f.nu_s;
    return f;
}

}  // namespace anofol
