#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "anofol/certified.hpp"
#include "anofol/foliation.hpp"
#include "anofol/hyperbolic.hpp"
#include "anofol/perturbation.hpp"
#include "anofol/vec.hpp"

namespace anofol {

struct margin_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct no_convergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct depth_overflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The perturbed lift f(x) = A x + p(x) of a torus homeomorphism isotopic to
// the linear model. Since p is bounded and periodic, f moves every point a
// bounded distance away from the model map, and the deck cocycle
//   f(x + k) = f(x) + A k   for integer vectors k
// holds by construction.
//
// Invertibility is enforced a priori: the certified bound Lip(p) must stay
// below the smallest singular value of A, which makes f a homeomorphism and
// makes the inverse iteration y <- A^{-1}(x - p(y)) a contraction with
// certified factor q = |A^{-1}| Lip(p) < 1.
class perturbed_lift {
  public:
    perturbed_lift(hyperbolic_matrix matrix, perturbation p,
                   double inverse_tolerance = 1e-12, int inverse_max_iterations = 10000,
                   int max_orbit_depth = 200)
        : matrix_(matrix),
          frame_(eigenframe(matrix)),
          p_(std::move(p)),
          inverse_tolerance_(inverse_tolerance),
          inverse_max_iterations_(inverse_max_iterations),
          max_orbit_depth_(max_orbit_depth) {
        if (inverse_tolerance_ <= 0.0)
            throw std::invalid_argument("inverse tolerance must be positive");
        a_ = matrix_.to_mat2();
        a_inv_ = matrix_.inverse_mat2();
        norm_a_ = spectral_norm(a_);
        sigma_min_ = smallest_singular_value(a_);
        lip_ = p_.lipschitz_bound();
        if (lip_ >= sigma_min_)
            throw margin_violation(
                "perturbation Lipschitz bound " + std::to_string(lip_) +
                " must stay below the smallest singular value " + std::to_string(sigma_min_) +
                " of the matrix");
        contraction_q_ = spectral_norm(a_inv_) * lip_;
    }

    const hyperbolic_matrix& matrix() const { return matrix_; }
    const eigen_frame& frame() const { return frame_; }
    const perturbation& displacement() const { return p_; }
    const mat2& model() const { return a_; }
    const mat2& model_inverse() const { return a_inv_; }

    double inverse_tolerance() const { return inverse_tolerance_; }
    int max_orbit_depth() const { return max_orbit_depth_; }
    double lipschitz_bound() const { return lip_; }
    double model_norm() const { return norm_a_; }
    double smallest_singular() const { return sigma_min_; }
    double inverse_contraction() const { return contraction_q_; }
    // Certified Lipschitz constant of f itself.
    double map_lipschitz() const { return norm_a_ + lip_; }

    vec2 apply(vec2 x) const { return a_ * x + p_.evaluate(x); }

    // Solves f(y) = x by the contraction iteration started at A^{-1} x.
    // The iteration count is fixed up front from the certified contraction
    // factor so that both |y - f^{-1}(x)| and the residual |f(y) - x| land
    // below the tolerance.
    vec2 apply_inverse(vec2 x) const {
        vec2 y = a_inv_ * x;
        if (p_.empty()) return y;
        vec2 y1 = a_inv_ * (x - p_.evaluate(y));
        const double step = norm(y1 - y);
        if (step == 0.0) return y1;

        const double q = contraction_q_;
        long remaining = 1;
        if (q > 0.0) {
            const double factor = std::max(1.0 / (1.0 - q), norm_a_);
            const double target = inverse_tolerance_ / (step * factor);
            if (target < 1.0)
                remaining = static_cast<long>(std::ceil(std::log(target) / std::log(q)));
            remaining = std::max(remaining - 1, 1L);
        }
        if (remaining + 1 > inverse_max_iterations_)
            throw no_convergence("inverse iteration needs " + std::to_string(remaining + 1) +
                                 " steps, limit is " + std::to_string(inverse_max_iterations_));
        y = y1;
        for (long i = 0; i < remaining; ++i) y = a_inv_ * (x - p_.evaluate(y));
        return y;
    }

    // n-fold composition: forward for n > 0, inverse for n < 0.
    vec2 iterate(vec2 x, int n) const {
        if (std::abs(n) > max_orbit_depth_)
            throw depth_overflow("orbit depth " + std::to_string(n) + " exceeds limit " +
                                 std::to_string(max_orbit_depth_));
        vec2 z = x;
        for (int i = 0; i < n; ++i) z = apply(z);
        for (int i = 0; i > n; --i) z = apply_inverse(z);
        return z;
    }

  private:
    hyperbolic_matrix matrix_;
    eigen_frame frame_;
    perturbation p_;
    double inverse_tolerance_;
    int inverse_max_iterations_;
    int max_orbit_depth_;

    mat2 a_, a_inv_;
    double norm_a_ = 0.0, sigma_min_ = 0.0, lip_ = 0.0, contraction_q_ = 0.0;
};

// Certified upper bound on the uniform displacement
//   C0 = sup_x max( d(f(x), A x), d(f^{-1}(x), A^{-1} x) ).
//
// Both displacements have closed forms in the leaf coordinates:
//   d(f(x), A x)            = |nu_s(p(x))| + |nu_u(p(x))|
//   d(f^{-1}(x), A^{-1} x)  = mu |nu_s(p(y))| + lambda |nu_u(p(y))|,  y = f^{-1}(x),
// and y sweeps the plane as x does, so the supremum of the second expression
// is a supremum over the same variable and no inverse solves are needed. By
// periodicity of p the supremum over the plane equals the supremum over the
// unit square, which is bounded by a grid maximum plus the Lipschitz slack
// L h sqrt(2)/2 with h the grid step and L a certified Lipschitz bound of
// the maximized function.
//
// Returned as value +/- error_radius with value - error_radius equal to the
// grid maximum (a rigorous lower bound) and value + error_radius equal to
// grid maximum + slack (the certified upper bound).
inline certified_value shadowing_constant(const perturbed_lift& lift, int grid_resolution) {
    if (grid_resolution < 2)
        throw std::invalid_argument("grid resolution must be at least 2");
    const eigen_frame& f = lift.frame();
    const perturbation& p = lift.displacement();
    if (p.empty()) return {0.0, 0.0};

    double grid_max = 0.0;
    const double h = 1.0 / static_cast<double>(grid_resolution);
    for (int i = 0; i < grid_resolution; ++i) {
        for (int j = 0; j < grid_resolution; ++j) {
            const vec2 x{static_cast<double>(i) * h, static_cast<double>(j) * h};
            const vec2 w = p.evaluate(x);
            const double ws = std::fabs(dot(f.nu_s, w));
            const double wu = std::fabs(dot(f.nu_u, w));
            const double forward = ws + wu;
            const double backward = f.mu * ws + f.lambda * wu;
            grid_max = std::max(grid_max, std::max(forward, backward));
        }
    }

    const double lip_s = p.covector_lipschitz(f.nu_s);
    const double lip_u = p.covector_lipschitz(f.nu_u);
    const double lip_interior =
        std::max(lip_s + lip_u, f.mu * lip_s + f.lambda * lip_u);
    const double slack = lip_interior * h * std::sqrt(2.0) * 0.5;
    return {grid_max + 0.5 * slack, 0.5 * slack};
}

}  // namespace anofol
