#pragma once

#include <cmath>

#include "anofol/hyperbolic.hpp"
#include "anofol/vec.hpp"

namespace anofol {

enum class leaf_kind { stable, unstable };

// A leaf of the model foliation, encoded purely by its transverse coordinate:
// the stable leaf with coordinate u0 is the line { x : nu_u(x) = u0 }, the
// unstable leaf with coordinate s0 is { x : nu_s(x) = s0 }. All set
// operations on leaves reduce to interval arithmetic on these coordinates.
struct leaf_coord {
    leaf_kind kind = leaf_kind::stable;
    double value = 0.0;
};

// Transverse coordinates. coord_u is constant along stable leaves and gets
// multiplied by mu under the model map; coord_s is constant along unstable
// leaves and gets multiplied by lambda.
inline double coord_u(const eigen_frame& f, vec2 x) { return dot(f.nu_u, x); }
inline double coord_s(const eigen_frame& f, vec2 x) { return dot(f.nu_s, x); }

// Pseudo-distances induced by the transverse measures: dist_u vanishes
// exactly on pairs lying on a common stable leaf, dist_s on a common
// unstable leaf, and their sum is a genuine distance equivalent to the
// Euclidean one.
inline double dist_u(const eigen_frame& f, vec2 x, vec2 y) {
    return std::fabs(dot(f.nu_u, x - y));
}
inline double dist_s(const eigen_frame& f, vec2 x, vec2 y) {
    return std::fabs(dot(f.nu_s, x - y));
}
inline double dist(const eigen_frame& f, vec2 x, vec2 y) {
    return dist_s(f, x, y) + dist_u(f, x, y);
}

// Closed C-neighborhood of a leaf in the transverse pseudo-distance.
inline bool leaf_neighborhood_contains(const eigen_frame& f, const leaf_coord& leaf,
                                       double c, vec2 x) {
    const double coord = leaf.kind == leaf_kind::stable ? coord_u(f, x) : coord_s(f, x);
    return std::fabs(coord - leaf.value) <= c;
}

// Constants c1, c2 with c1 |x-y| <= dist(x,y) <= c2 |x-y|. They come from
// the covector matrix N with rows nu_u, nu_s: the lower constant is the
// smallest singular value of N, the upper one is sqrt(2) times the largest.
inline double dist_lower_constant(const eigen_frame& f) {
    return smallest_singular_value({f.nu_u.x, f.nu_u.y, f.nu_s.x, f.nu_s.y});
}
inline double dist_upper_constant(const eigen_frame& f) {
    return std::sqrt(2.0) * spectral_norm({f.nu_u.x, f.nu_u.y, f.nu_s.x, f.nu_s.y});
}

}  // namespace anofol
