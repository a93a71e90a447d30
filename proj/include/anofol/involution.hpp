#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "anofol/lift.hpp"
#include "anofol/sampling.hpp"
#include "anofol/shadowing.hpp"
#include "anofol/vec.hpp"

namespace anofol {

struct equivariance_violation : std::runtime_error {
    equivariance_violation(const std::string& msg, vec2 sample, double residual)
        : std::runtime_error(msg), worst_sample(sample), worst_residual(residual) {}
    vec2 worst_sample;
    double worst_residual;
};

// The elliptic involution i(x) = -x realizes the torus as a double branched
// cover of the sphere, branched over the four half-integer points. A lift
// with an odd displacement field commutes with the involution,
// f(-x) = -f(x), so the generalized partition it generates is involution
// invariant and descends to the quotient sphere: the leaf with coordinate t
// pairs with the leaf with coordinate -t.
//
// The lift is stored as given; descent checks detect a non-odd displacement
// at run time instead of rejecting it here, so the failure mode can be
// exercised deliberately.
struct involution_model {
    perturbed_lift lift;

    static vec2 involution(vec2 x) { return -x; }

    // Ramification points of the quotient, as representatives in [0,1)^2.
    static std::array<vec2, 4> branch_points() {
        return {vec2{0.0, 0.0}, vec2{0.5, 0.0}, vec2{0.0, 0.5}, vec2{0.5, 0.5}};
    }
};

// Canonical representative of the involution orbit { x mod 1, -x mod 1 }:
// the lexicographically smaller of the two fractional representatives.
inline vec2 quotient_representative(vec2 x) {
    const vec2 a = fractional(x);
    const vec2 b = fractional(-x);
    if (a.x < b.x) return a;
    if (b.x < a.x) return b;
    return a.y <= b.y ? a : b;
}

struct descent_check_result {
    long samples = 0;
    double worst_stable = 0.0;
    double worst_unstable = 0.0;
    double threshold = 0.0;
    bool pass() const { return worst_stable <= threshold && worst_unstable <= threshold; }
};

// Verifies that both generalized coordinates are anti-symmetric under the
// involution, theta(-x) = -theta(x), within twice the coordinate tolerance
// on seeded random samples. On success the partition descends to the
// quotient sphere; a violation means the displacement field was not odd.
inline descent_check_result check_descent(const involution_model& model,
                                          const shadow_constant& sc, long sample_count,
                                          double tol, std::uint64_t seed = 42) {
    if (sample_count < 1) throw std::invalid_argument("descent check needs samples");
    descent_check_result result;
    result.samples = sample_count;
    result.threshold = 2.0 * tol;

    sample_stream rng = substream(seed, "descent");
    vec2 worst_point{0.0, 0.0};
    for (long i = 0; i < sample_count; ++i) {
        const vec2 x = rng.next_point();
        const double ts_pos = generalized_leaf(model.lift, sc, x, tol, leaf_kind::stable).coord.value;
        const double ts_neg = generalized_leaf(model.lift, sc, -x, tol, leaf_kind::stable).coord.value;
        const double tu_pos = generalized_leaf(model.lift, sc, x, tol, leaf_kind::unstable).coord.value;
        const double tu_neg = generalized_leaf(model.lift, sc, -x, tol, leaf_kind::unstable).coord.value;
        const double rs = std::fabs(ts_pos + ts_neg);
        const double ru = std::fabs(tu_pos + tu_neg);
        if (rs > result.worst_stable) {
            result.worst_stable = rs;
            if (rs >= result.worst_unstable) worst_point = x;
        }
        if (ru > result.worst_unstable) {
            result.worst_unstable = ru;
            if (ru >= result.worst_stable) worst_point = x;
        }
    }
    if (!result.pass()) {
        const double worst = std::max(result.worst_stable, result.worst_unstable);
        throw equivariance_violation(
            "generalized leaf coordinates are not anti-symmetric under x -> -x "
            "(worst residual " +
                std::to_string(worst) + " at sample (" + std::to_string(worst_point.x) + ", " +
                std::to_string(worst_point.y) + ")); the displacement field is not odd",
            worst_point, worst);
    }
    return result;
}

}  // namespace anofol
