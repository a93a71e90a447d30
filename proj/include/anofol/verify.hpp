#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "anofol/config.hpp"
#include "anofol/foliation.hpp"
#include "anofol/involution.hpp"
#include "anofol/lift.hpp"
#include "anofol/report.hpp"
#include "anofol/sampling.hpp"
#include "anofol/shadowing.hpp"
#include "anofol/vec.hpp"

// Property suite behind the `verify` command. Each check runs on seeded
// samples and lands in one report record; the claim labels (T1.1 ... T1.7,
// T2) refer to the points of the partition structure theorem as laid out in
// the README.

namespace anofol {

namespace detail {

constexpr double float_slack = 1e-12;

inline property_record make_record(const char* id, const char* ref, long samples,
                                   double worst, double threshold) {
    property_record r;
    r.id = id;
    r.ref = ref;
    r.samples = samples;
    r.worst_residual = worst;
    r.threshold = threshold;
    r.pass = worst <= threshold;
    return r;
}

// Nearby pair at pseudo-distance at most `limit`, log-uniform in scale.
inline vec2 nearby_of(const eigen_frame& f, sample_stream& rng, vec2 x, double limit) {
    const double angle = 6.283185307179586 * rng.next_unit();
    const double r = 1e-6 * std::pow(1e3, rng.next_unit());
    vec2 v{r * std::cos(angle), r * std::sin(angle)};
    const double d = dist(f, x, x + v);
    if (d > limit) v = (0.999 * limit / d) * v;
    return x + v;
}

inline int complement_components(const std::vector<char>& band, int res) {
    std::vector<char> seen(band.size(), 0);
    std::vector<int> stack;
    int components = 0;
    for (int start = 0; start < res * res; ++start) {
        if (band[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)])
            continue;
        ++components;
        seen[static_cast<std::size_t>(start)] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            const int i = cur / res, j = cur % res;
            const int ni[4] = {i + 1, i - 1, i, i};
            const int nj[4] = {j, j, j + 1, j - 1};
            for (int t = 0; t < 4; ++t) {
                if (ni[t] < 0 || nj[t] < 0 || ni[t] >= res || nj[t] >= res) continue;
                const int idx = ni[t] * res + nj[t];
                if (band[static_cast<std::size_t>(idx)] || seen[static_cast<std::size_t>(idx)])
                    continue;
                seen[static_cast<std::size_t>(idx)] = 1;
                stack.push_back(idx);
            }
        }
    }
    return components;
}

}  // namespace detail

inline verification_report run_verification(const run_config& cfg) {
    using detail::float_slack;
    using detail::make_record;

    const perturbed_lift lift = make_lift(cfg);
    const eigen_frame& f = lift.frame();
    const shadow_constant sc = make_shadow_constant(cfg, lift);
    const double c0_upper = sc.c0_bound.upper_bound();
    const double tol = cfg.theta_tol;
    const double c = sc.value;

    verification_report report;

    {  // triangle inequality for all three pseudo-distances
        sample_stream rng = substream(cfg.seed, "metric.triangle");
        double worst = std::numeric_limits<double>::lowest();
        for (long i = 0; i < cfg.samples.points; ++i) {
            const vec2 x = rng.next_point(), y = rng.next_point(), z = rng.next_point();
            worst = std::max(worst, dist_u(f, x, z) - dist_u(f, x, y) - dist_u(f, y, z));
            worst = std::max(worst, dist_s(f, x, z) - dist_s(f, x, y) - dist_s(f, y, z));
            worst = std::max(worst, dist(f, x, z) - dist(f, x, y) - dist(f, y, z));
        }
        report.properties.push_back(make_record("metric.triangle", "transverse-metric",
                                                cfg.samples.points, worst, float_slack));
    }

    {  // deck transformations act by isometries
        sample_stream rng = substream(cfg.seed, "metric.deck");
        double worst = 0.0;
        for (long i = 0; i < cfg.samples.points; ++i) {
            const vec2 x = rng.next_point(), y = rng.next_point();
            const ivec2 k = rng.next_ivec(-3, 3);
            worst = std::max(worst, std::fabs(dist(f, x + k, y + k) - dist(f, x, y)));
            worst = std::max(worst, std::fabs(dist_u(f, x + k, y + k) - dist_u(f, x, y)));
            worst = std::max(worst, std::fabs(dist_s(f, x + k, y + k) - dist_s(f, x, y)));
        }
        report.properties.push_back(make_record("metric.deck-invariance", "transverse-metric",
                                                cfg.samples.points, worst, float_slack));
    }

    {  // model map scales the transverse distances by exactly lambda
        sample_stream rng = substream(cfg.seed, "metric.contraction");
        const mat2 a = lift.model();
        const mat2 a_inv = lift.model_inverse();
        double worst = 0.0;
        for (long i = 0; i < cfg.samples.points; ++i) {
            const vec2 x = rng.next_point(), y = rng.next_point();
            worst = std::max(
                worst, std::fabs(dist_u(f, a_inv * x, a_inv * y) - f.lambda * dist_u(f, x, y)));
            worst =
                std::max(worst, std::fabs(dist_s(f, a * x, a * y) - f.lambda * dist_s(f, x, y)));
        }
        report.properties.push_back(make_record("metric.contraction", "transverse-metric",
                                                cfg.samples.points, worst, float_slack));
    }

    {  // equivalence with the Euclidean metric
        sample_stream rng = substream(cfg.seed, "metric.norm");
        const double c1 = dist_lower_constant(f);
        const double c2 = dist_upper_constant(f);
        double worst = std::numeric_limits<double>::lowest();
        for (long i = 0; i < cfg.samples.points; ++i) {
            const vec2 x = rng.next_point(), y = rng.next_point();
            const double euclid = norm(x - y);
            const double d = dist(f, x, y);
            worst = std::max(worst, c1 * euclid - d);
            worst = std::max(worst, d - c2 * euclid);
        }
        report.properties.push_back(make_record("metric.norm-equivalence", "transverse-metric",
                                                cfg.samples.points, worst, float_slack));
    }

    {  // deck cocycle of the lift
        sample_stream rng = substream(cfg.seed, "lift.cocycle");
        const mat2 a = lift.model();
        double worst = 0.0;
        for (long i = 0; i < cfg.samples.points; ++i) {
            const vec2 x = rng.next_point();
            const ivec2 k = rng.next_ivec(-3, 3);
            const vec2 expect = a * to_vec2(k);
            worst = std::max(worst, norm(lift.apply(x + k) - lift.apply(x) - expect));
        }
        report.properties.push_back(make_record("lift.cocycle", "deck-cocycle",
                                                cfg.samples.points, worst, float_slack));
    }

    {  // certified displacement bound holds pointwise, both directions
        sample_stream rng = substream(cfg.seed, "lift.shadowing");
        const mat2 a = lift.model();
        const mat2 a_inv = lift.model_inverse();
        double worst = 0.0;
        for (long i = 0; i < cfg.samples.points; ++i) {
            const vec2 x = rng.next_point();
            worst = std::max(worst, dist(f, lift.apply(x), a * x));
            worst = std::max(worst, dist(f, lift.apply_inverse(x), a_inv * x));
        }
        report.properties.push_back(make_record("lift.shadowing-bound", "displacement-claim",
                                                cfg.samples.points, worst,
                                                c0_upper + float_slack));
    }

    {  // inverse round trip
        sample_stream rng = substream(cfg.seed, "lift.inverse");
        double worst = 0.0;
        for (long i = 0; i < cfg.samples.points; ++i) {
            const vec2 x = rng.next_point();
            worst = std::max(worst, norm(lift.apply(lift.apply_inverse(x)) - x));
        }
        report.properties.push_back(make_record("lift.inverse-residual", "inverse-contraction",
                                                cfg.samples.points, worst,
                                                lift.inverse_tolerance() * (1.0 + lift.model_norm())));
    }

    {  // stable distances contract up to the accumulated displacement term
        sample_stream rng = substream(cfg.seed, "lift.stable-contraction");
        const double additive = 2.0 * c0_upper / (1.0 - f.lambda);
        double worst = std::numeric_limits<double>::lowest();
        for (long i = 0; i < cfg.samples.pairs; ++i) {
            const vec2 x = rng.next_point(), y = rng.next_point();
            const auto track = orbit_divergence(lift, x, y, cfg.orbit_depth);
            const double ds0 = track[0].ds;
            double pow_l = 1.0;
            for (const divergence_sample& s : track) {
                worst = std::max(worst, s.ds - (pow_l * ds0 + additive));
                pow_l *= f.lambda;
            }
        }
        report.properties.push_back(make_record("lift.stable-contraction", "T1.6-corrected",
                                                cfg.samples.pairs, worst, float_slack));
    }

    {  // candidate intervals are nested in depth
        sample_stream rng = substream(cfg.seed, "shadow.nested");
        double worst = std::numeric_limits<double>::lowest();
        for (long i = 0; i < cfg.samples.points; ++i) {
            vec2 z = rng.next_point();
            double scale = 1.0;
            double lo = coord_u(f, z) - c, hi = coord_u(f, z) + c;
            for (int n = 1; n <= cfg.nest_depth; ++n) {
                z = lift.apply(z);
                scale *= f.lambda;
                const double cu = coord_u(f, z);
                const double nlo = scale * (cu - c), nhi = scale * (cu + c);
                worst = std::max(worst, std::max(lo - nlo, nhi - hi));
                lo = nlo;
                hi = nhi;
            }
        }
        report.properties.push_back(make_record("shadow.nested-intervals", "nesting-lemma",
                                                cfg.samples.points, worst, float_slack));
    }

    {  // the certified coordinate lies in the candidate interval at every depth
        sample_stream rng = substream(cfg.seed, "shadow.containment");
        double worst = std::numeric_limits<double>::lowest();
        for (long i = 0; i < cfg.samples.points / 4 + 1; ++i) {
            const vec2 x = rng.next_point();
            const generalized_leaf_id id = generalized_leaf(lift, sc, x, tol);
            vec2 z = x;
            double scale = 1.0;
            for (int n = 0; n <= id.depth; ++n) {
                if (n > 0) {
                    z = lift.apply(z);
                    scale *= f.lambda;
                }
                const double cu = coord_u(f, z);
                worst = std::max(worst, scale * (cu - c) - id.coord.value);
                worst = std::max(worst, id.coord.value - scale * (cu + c));
            }
        }
        report.properties.push_back(make_record("shadow.certified-containment", "nesting-lemma",
                                                cfg.samples.points / 4 + 1, worst, float_slack));
    }

    {  // the coordinate intertwines f with multiplication by mu (resp. lambda)
        sample_stream rng = substream(cfg.seed, "theta.equivariance");
        double worst_s = 0.0, worst_u = 0.0;
        for (long i = 0; i < cfg.samples.points; ++i) {
            const vec2 x = rng.next_point();
            const vec2 fx = lift.apply(x);
            const double ts = generalized_leaf(lift, sc, x, tol, leaf_kind::stable).coord.value;
            const double ts_f =
                generalized_leaf(lift, sc, fx, tol, leaf_kind::stable).coord.value;
            worst_s = std::max(worst_s, std::fabs(ts_f - f.mu * ts));
            const double tu = generalized_leaf(lift, sc, x, tol, leaf_kind::unstable).coord.value;
            const double tu_f =
                generalized_leaf(lift, sc, fx, tol, leaf_kind::unstable).coord.value;
            worst_u = std::max(worst_u, std::fabs(tu_f - f.lambda * tu));
        }
        report.properties.push_back(make_record("theta.equivariance-stable", "T1.3",
                                                cfg.samples.points, worst_s,
                                                (1.0 + f.mu) * tol));
        report.properties.push_back(make_record("theta.equivariance-unstable", "T1.3",
                                                cfg.samples.points, worst_u,
                                                (1.0 + f.lambda) * tol));
    }

    {  // the coordinate shifts by nu_u(k) under deck translations
        sample_stream rng = substream(cfg.seed, "theta.deck");
        double worst = 0.0;
        for (long i = 0; i < cfg.samples.points; ++i) {
            const vec2 x = rng.next_point();
            const ivec2 k = rng.next_ivec(-3, 3);
            const double ts = generalized_leaf(lift, sc, x, tol).coord.value;
            const double ts_k = generalized_leaf(lift, sc, x + k, tol).coord.value;
            worst = std::max(worst, std::fabs(ts_k - ts - dot(f.nu_u, to_vec2(k))));
        }
        report.properties.push_back(
            make_record("theta.deck-equivariance", "T1.4", cfg.samples.points, worst, 2.0 * tol));
    }

    {  // equal coordinate <=> bounded forward track (stable-set dichotomy)
        sample_stream rng = substream(cfg.seed, "theta.dichotomy");
        long disagreements = 0;
        long used = 0;
        for (long i = 0; i < cfg.samples.pairs; ++i) {
            const vec2 x = rng.next_point(), y = rng.next_point();
            const double tx = generalized_leaf(lift, sc, x, tol).coord.value;
            const double ty = generalized_leaf(lift, sc, y, tol).coord.value;
            const double delta = std::fabs(tx - ty);
            if (delta > 0.0 && delta < 10.0 * tol) continue;  // ambiguity band
            ++used;
            const bool same_theta = delta <= 2.0 * tol;
            const auto track = orbit_divergence(lift, x, y, cfg.orbit_depth);
            const double same_bound =
                2.0 * c + track[0].ds + 2.0 * c0_upper / (1.0 - f.lambda);
            bool bounded = true;
            bool growing = true;
            double pow_mu = 1.0;
            for (const divergence_sample& s : track) {
                if (s.d > same_bound + float_slack) bounded = false;
                const double lower = pow_mu * delta - 2.0 * c - 2.0 * tol * pow_mu;
                if (s.du < lower - float_slack * (1.0 + pow_mu)) growing = false;
                pow_mu *= f.mu;
            }
            const bool agree = same_theta ? bounded : growing;
            if (!agree) ++disagreements;
        }
        report.properties.push_back(make_record("theta.dichotomy", "T1.1+T1.6", used,
                                                static_cast<double>(disagreements), 0.0));
    }

    {  // the partition does not depend on the chosen shadow constant
        sample_stream rng = substream(cfg.seed, "theta.c-independence");
        const double margins[3] = {0.01, 0.1, 1.0};
        shadow_constant scs[3];
        for (int m = 0; m < 3; ++m) {
            scs[m] = choose_shadow_constant(sc.c0_bound, f.lambda, margins[m]);
            scs[m].value *= cfg.shadow_scale;
        }
        double worst = std::numeric_limits<double>::lowest();
        for (long i = 0; i < cfg.samples.c_independence; ++i) {
            const vec2 x = rng.next_point();
            generalized_leaf_id ids[3];
            for (int m = 0; m < 3; ++m) ids[m] = generalized_leaf(lift, scs[m], x, tol);
            for (int m = 0; m < 3; ++m)
                for (int l = m + 1; l < 3; ++l)
                    worst = std::max(worst,
                                     std::fabs(ids[m].coord.value - ids[l].coord.value) -
                                         (ids[m].coord.error_radius + ids[l].coord.error_radius));
        }
        report.properties.push_back(make_record("theta.c-independence", "T1.6",
                                                cfg.samples.c_independence, worst, float_slack));
    }

    {  // continuity estimate on nearby pairs
        sample_stream rng = substream(cfg.seed, "theta.continuity");
        const double lf = lift.map_lipschitz();
        double worst = std::numeric_limits<double>::lowest();
        for (long i = 0; i < cfg.samples.nearby_pairs; ++i) {
            const vec2 x = rng.next_point();
            const vec2 y = detail::nearby_of(f, rng, x, 1e-3);
            const double d = dist(f, x, y);
            const double tx = generalized_leaf(lift, sc, x, tol).coord.value;
            const double ty = generalized_leaf(lift, sc, y, tol).coord.value;
            double bound = 2.0 * c + d;
            double pow_l = 1.0, pow_ratio = 1.0;
            for (int n = 1; n <= cfg.nest_depth; ++n) {
                pow_l *= f.lambda;
                pow_ratio *= f.lambda * lf;
                bound = std::min(bound, 2.0 * c * pow_l + pow_ratio * d);
            }
            worst = std::max(worst, std::fabs(tx - ty) - bound);
        }
        report.properties.push_back(make_record("theta.continuity", "T1.7",
                                                cfg.samples.nearby_pairs, worst, float_slack));
    }

    {  // a sampled leaf band separates the window into exactly two pieces
        constexpr int res = 256;
        const rect& w = cfg.window;
        const double hx = (w.x_max - w.x_min) / (res - 1);
        const double hy = (w.y_max - w.y_min) / (res - 1);
        const double cell_diag = std::hypot(hx, hy);
        int depth = -1;
        if (c >= 1.5 * cell_diag) {
            depth = 0;
            while (c * std::pow(f.lambda, depth + 1) >= 1.5 * cell_diag) ++depth;
        }
        if (depth < 0) {
            // band thinner than the grid at every depth (unperturbed runs);
            // nothing to flood-fill
            report.properties.push_back(make_record("leaf.flood-fill", "T1.2-sampled", 0, 0.0, 0.0));
        } else {
            const double u0 = generalized_leaf(lift, sc, w.center(), tol).coord.value;
            const leaf_coord leaf{leaf_kind::stable, u0};
            std::vector<char> band(static_cast<std::size_t>(res) * res, 0);
            for (int i = 0; i < res; ++i)
                for (int j = 0; j < res; ++j) {
                    const vec2 x{w.x_min + i * hx, w.y_min + j * hy};
                    if (membership_depth(lift, sc, x, leaf, depth))
                        band[static_cast<std::size_t>(i) * res + j] = 1;
                }
            const int components = detail::complement_components(band, res);
            report.properties.push_back(make_record("leaf.flood-fill", "T1.2-sampled",
                                                    static_cast<long>(res) * res,
                                                    std::fabs(components - 2.0), 0.0));
        }
    }

    if (cfg.branched_cover) {  // partition descends through the involution quotient
        const involution_model model{lift};
        property_record r;
        r.id = "cover.descent";
        r.ref = "T2-descent";
        r.samples = cfg.samples.descent;
        r.threshold = 2.0 * tol;
        try {
            const descent_check_result res =
                check_descent(model, sc, cfg.samples.descent, tol, cfg.seed);
            r.worst_residual = std::max(res.worst_stable, res.worst_unstable);
            r.pass = true;
        } catch (const equivariance_violation& e) {
            r.worst_residual = e.worst_residual;
            r.pass = false;
        }
        report.properties.push_back(r);
    }

    return report;
}

}  // namespace anofol
