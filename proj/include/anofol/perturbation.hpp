#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "anofol/vec.hpp"

namespace anofol {

// One Fourier mode of the displacement field:
//   ( cx cos(2 pi <k,x>) + sx sin(2 pi <k,x>),
//     cy cos(2 pi <k,x>) + sy sin(2 pi <k,x>) )
struct fourier_term {
    ivec2 k;
    double cx = 0.0, sx = 0.0;
    double cy = 0.0, sy = 0.0;
};

// Finite Fourier sum p(x). Exactly periodic under integer translations by
// construction, with closed-form certified Lipschitz data, and odd
// symmetrization is just zeroing the cosine amplitudes.
class perturbation {
  public:
    perturbation() = default;
    explicit perturbation(std::vector<fourier_term> terms) : terms_(std::move(terms)) {}

    const std::vector<fourier_term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    vec2 evaluate(vec2 x) const {
        double px = 0.0, py = 0.0;
        for (const fourier_term& t : terms_) {
            // Reduce the phase before scaling by 2 pi; keeps periodicity
            // p(x + k) = p(x) tight in floating point.
            const double phase = fractional(static_cast<double>(t.k.x) * x.x +
                                            static_cast<double>(t.k.y) * x.y);
            const double c = std::cos(two_pi * phase);
            const double s = std::sin(two_pi * phase);
            px += t.cx * c + t.sx * s;
            py += t.cy * c + t.sy * s;
        }
        return {px, py};
    }

    // Extended-precision twin of evaluate(), for orbit-difference tracking.
    std::pair<long double, long double> evaluate_ld(long double x, long double y) const {
        long double px = 0.0L, py = 0.0L;
        for (const fourier_term& t : terms_) {
            long double phase = static_cast<long double>(t.k.x) * x +
                                static_cast<long double>(t.k.y) * y;
            phase -= std::floor(phase);
            const long double c = std::cos(two_pi_ld * phase);
            const long double s = std::sin(two_pi_ld * phase);
            px += t.cx * c + t.sx * s;
            py += t.cy * c + t.sy * s;
        }
        return {px, py};
    }

    // Certified upper bound on the Lipschitz constant of p (Euclidean
    // operator norm of the Jacobian). Two rigorous bounds are available:
    // the per-term sum  Sigma 2 pi |k| (|cx|+|sx|+|cy|+|sy|)  and the
    // spectral norm of the entrywise amplitude matrix
    //   M[i][l] = Sigma 2 pi |k_l| sqrt(c_i^2 + s_i^2),
    // which bounds |Dp| entrywise. The minimum of the two is returned; the
    // matrix form is what keeps multi-term perturbations inside the
    // invertibility margin.
    double lipschitz_bound() const {
        double sum_form = 0.0;
        double m11 = 0.0, m12 = 0.0, m21 = 0.0, m22 = 0.0;
        for (const fourier_term& t : terms_) {
            const double kn = norm(to_vec2(t.k));
            sum_form += two_pi * kn *
                        (std::fabs(t.cx) + std::fabs(t.sx) + std::fabs(t.cy) + std::fabs(t.sy));
            const double ax = std::hypot(t.cx, t.sx);
            const double ay = std::hypot(t.cy, t.sy);
            const double k1 = std::fabs(static_cast<double>(t.k.x));
            const double k2 = std::fabs(static_cast<double>(t.k.y));
            m11 += two_pi * k1 * ax;
            m12 += two_pi * k2 * ax;
            m21 += two_pi * k1 * ay;
            m22 += two_pi * k2 * ay;
        }
        return std::min(sum_form, spectral_norm({m11, m12, m21, m22}));
    }

    // Certified Lipschitz bound of x -> nu(p(x)) for a fixed covector nu:
    //   Sigma 2 pi |k| sqrt(nu(c)^2 + nu(s)^2)
    // with c = (cx,cy), s = (sx,sy) per term.
    double covector_lipschitz(vec2 nu) const {
        double total = 0.0;
        for (const fourier_term& t : terms_) {
            const double kn = norm(to_vec2(t.k));
            const double nc = nu.x * t.cx + nu.y * t.cy;
            const double ns = nu.x * t.sx + nu.y * t.sy;
            total += two_pi * kn * std::hypot(nc, ns);
        }
        return total;
    }

    // p is odd, p(-x) = -p(x), exactly when every cosine amplitude is zero.
    bool is_odd() const {
        for (const fourier_term& t : terms_)
            if (t.cx != 0.0 || t.cy != 0.0) return false;
        return true;
    }

  private:
    static constexpr double two_pi = 6.283185307179586476925286766559;
    static constexpr long double two_pi_ld = 6.283185307179586476925286766559L;

    std::vector<fourier_term> terms_;
};

// Odd part (p(x) - p(-x)) / 2, realized exactly by zeroing the cosine
// amplitudes. Idempotent, and the identity on perturbations that are
// already odd.
inline perturbation symmetrize(const perturbation& p) {
    std::vector<fourier_term> terms = p.terms();
    for (fourier_term& t : terms) {
        t.cx = 0.0;
        t.cy = 0.0;
    }
    return perturbation(std::move(terms));
}

}  // namespace anofol
