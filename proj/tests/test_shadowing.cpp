#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "anofol/sampling.hpp"
#include "anofol/shadowing.hpp"
#include "support.hpp"

using namespace anofol;

namespace {

struct reference_setup {
    perturbed_lift lift;
    shadow_constant sc;
    certified_value c0;

    reference_setup()
        : lift(testsupport::reference_lift()),
          sc(),
          c0(shadowing_constant(lift, 512)) {
        sc = choose_shadow_constant(c0, lift.frame().lambda, 0.1);
    }
};

}  // namespace

TEST_CASE("shadow constant selection") {
    CHECK(choose_shadow_constant({0.0, 0.0}, 0.381966, 0.1).value == 0.0);
    CHECK(choose_shadow_constant({1.0, 0.0}, 0.5, 0.1).value == doctest::Approx(2.2).epsilon(1e-14));
    CHECK_THROWS_AS(choose_shadow_constant({1.0, 0.0}, 0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(choose_shadow_constant({1.0, 0.0}, 1.5, 0.1), std::invalid_argument);

    sample_stream rng(3);
    for (int i = 0; i < 200; ++i) {
        const certified_value c0{rng.next_unit(), 0.1 * rng.next_unit()};
        const double lambda = 0.9 * rng.next_unit();
        const double margin = 0.01 + rng.next_unit();
        const shadow_constant sc = choose_shadow_constant(c0, lambda, margin);
        CHECK(sc.value * (1.0 - lambda) >= c0.upper_bound());  // defining inequality
        if (c0.upper_bound() > 0.0) CHECK(sc.value * (1.0 - lambda) > c0.upper_bound());
        // a larger margin gives a strictly larger constant
        if (c0.upper_bound() > 0.0)
            CHECK(choose_shadow_constant(c0, lambda, margin * 2.0).value > sc.value);
    }
}

TEST_CASE("candidate leaf intervals") {
    const reference_setup ref;
    const eigen_frame& f = ref.lift.frame();

    SUBCASE("depth zero brackets the transverse coordinate") {
        const vec2 x{0.3, 0.7};
        const leaf_interval iv = leaf_interval_at(ref.lift, ref.sc, x, 0);
        CHECK(iv.lo == doctest::Approx(coord_u(f, x) - ref.sc.value).epsilon(1e-14));
        CHECK(iv.hi == doctest::Approx(coord_u(f, x) + ref.sc.value).epsilon(1e-14));
        CHECK(iv.center == doctest::Approx(coord_u(f, x)).epsilon(1e-14));
    }

    SUBCASE("width law") {
        const vec2 x{0.12, 0.95};
        const leaf_interval iv = leaf_interval_at(ref.lift, ref.sc, x, 10);
        const double expect = 2.0 * ref.sc.value * std::pow(f.lambda, 10);
        CHECK(iv.width() == doctest::Approx(expect).epsilon(1e-12));
    }

    SUBCASE("unperturbed intervals stay centered on the coordinate") {
        const perturbed_lift plain(make_hyperbolic_matrix(2, 1, 1, 1), perturbation{});
        shadow_constant sc;
        sc.value = 0.1;
        sample_stream rng(7);
        for (int i = 0; i < 50; ++i) {
            const vec2 x = rng.next_point();
            for (int n : {0, 3, 9}) {
                const leaf_interval iv = leaf_interval_at(plain, sc, x, n);
                CHECK(iv.center == doctest::Approx(coord_u(plain.frame(), x)).epsilon(1e-11));
                CHECK(iv.contains(coord_u(plain.frame(), x), 1e-12));
            }
        }
    }

    SUBCASE("negative depth is rejected") {
        CHECK_THROWS_AS(leaf_interval_at(ref.lift, ref.sc, {0, 0}, -1), std::invalid_argument);
    }

    SUBCASE("unstable intervals run along the backward orbit") {
        const vec2 x{0.22, 0.81};
        const leaf_interval iv0 =
            leaf_interval_at(ref.lift, ref.sc, x, 0, leaf_kind::unstable);
        CHECK(iv0.center == doctest::Approx(coord_s(f, x)).epsilon(1e-14));
        // nested in depth, like the stable side
        leaf_interval outer = iv0;
        for (int n = 1; n <= 10; ++n) {
            const leaf_interval inner =
                leaf_interval_at(ref.lift, ref.sc, x, n, leaf_kind::unstable);
            CHECK(inner.width() ==
                  doctest::Approx(2.0 * ref.sc.value * std::pow(f.lambda, n)).epsilon(1e-11));
            CHECK(outer.contains(inner, 1e-11));
            outer = inner;
        }
        // membership against the point's own generalized unstable leaf
        const double s0 = theta_u(ref.lift, ref.sc, x, 1e-8).coord.value;
        CHECK(membership_depth(ref.lift, ref.sc, x, {leaf_kind::unstable, s0}, 5));
        CHECK_FALSE(membership_depth(
            ref.lift, ref.sc, x, {leaf_kind::unstable, s0 + 3.0 * ref.sc.value}, 0));
    }

    SUBCASE("zero-width intervals work without special cases") {
        anofol::run_config cfg = testsupport::unperturbed_config();
        const perturbed_lift plain = make_lift(cfg);
        const shadow_constant sc = make_shadow_constant(cfg, plain);
        REQUIRE(sc.value == 0.0);
        const vec2 x{0.3, 0.7};
        const leaf_interval iv = leaf_interval_at(plain, sc, x, 0);
        CHECK(iv.lo == iv.hi);
        CHECK(iv.width() == 0.0);
        CHECK(iv.contains(iv.center));
        // membership of the point's own leaf holds at depth zero even with
        // a point interval
        const leaf_coord own{leaf_kind::stable, coord_u(plain.frame(), x)};
        CHECK(membership_depth(plain, sc, x, own, 0));
        CHECK_NOTHROW(leaf_sample(plain, sc, own, {-0.5, 0.5, -0.5, 0.5}, 16, 2));
    }
}

TEST_CASE("interval nesting") {
    const reference_setup ref;

    SUBCASE("nested at the chosen constant") {
        sample_stream rng(11);
        for (int i = 0; i < 300; ++i) {
            const vec2 x = rng.next_point();
            leaf_interval outer = leaf_interval_at(ref.lift, ref.sc, x, 0);
            for (int n = 1; n <= 30; ++n) {
                const leaf_interval inner = leaf_interval_at(ref.lift, ref.sc, x, n);
                CHECK(outer.contains(inner, 1e-12));
                outer = inner;
            }
        }
    }

    SUBCASE("a deliberately small constant breaks nesting") {
        // interval nesting needs C >= lambda * sup|nu_u(p)| / (1 - lambda)
        // ~ 0.036 here; 0.02 sits below it
        shadow_constant tiny = ref.sc;
        tiny.value = 0.02;
        sample_stream rng(13);
        long violations = 0;
        for (int i = 0; i < 200; ++i) {
            const vec2 x = rng.next_point();
            leaf_interval outer = leaf_interval_at(ref.lift, tiny, x, 0);
            for (int n = 1; n <= 30; ++n) {
                const leaf_interval inner = leaf_interval_at(ref.lift, tiny, x, n);
                if (!outer.contains(inner, 1e-12)) ++violations;
                outer = inner;
            }
        }
        CHECK(violations > 0);
    }
}

TEST_CASE("generalized leaf coordinate") {
    const reference_setup ref;
    const eigen_frame& f = ref.lift.frame();
    const double tol = 1e-8;

    SUBCASE("unperturbed coordinate is the linear one, exactly") {
        anofol::run_config cfg = testsupport::unperturbed_config();
        const perturbed_lift plain = make_lift(cfg);
        const shadow_constant sc = make_shadow_constant(cfg, plain);
        CHECK(sc.value == 0.0);
        sample_stream rng(17);
        for (int i = 0; i < 200; ++i) {
            const vec2 x = rng.next_point();
            const generalized_leaf_id s = theta_s(plain, sc, x, tol);
            CHECK(s.coord.value == coord_u(plain.frame(), x));
            CHECK(s.coord.error_radius == 0.0);
            CHECK(s.depth == 0);
            const generalized_leaf_id u = theta_u(plain, sc, x, tol);
            CHECK(u.coord.value == coord_s(plain.frame(), x));
        }
    }

    SUBCASE("certified radius respects the tolerance") {
        sample_stream rng(19);
        for (double t : {1e-4, 1e-6, 1e-8, 1e-10}) {
            const vec2 x = rng.next_point();
            const generalized_leaf_id id = theta_s(ref.lift, ref.sc, x, t);
            CHECK(id.coord.error_radius <= t);
            CHECK(id.coord.error_radius > 0.0);
        }
    }

    SUBCASE("the fixed point sits on the zero leaf") {
        // the displacement field is odd, so the origin is the (unique)
        // plane fixed point
        CHECK(norm(ref.lift.apply({0.0, 0.0})) <= 1e-15);
        CHECK(std::fabs(theta_s(ref.lift, ref.sc, {0.0, 0.0}, tol).coord.value) <= tol);
        CHECK(std::fabs(theta_u(ref.lift, ref.sc, {0.0, 0.0}, tol).coord.value) <= tol);
    }

    SUBCASE("relative fixed points have the predicted coordinates") {
        // f(x) = x + m forces mu t = t + nu_u(m) on the stable coordinate
        // and lambda t = t + nu_s(m) on the unstable one
        for (ivec2 m : {ivec2{0, 0}, ivec2{1, 0}, ivec2{0, 1}, ivec2{-1, 2}}) {
            const vec2 fp = testsupport::relative_fixed_point(ref.lift, m);
            REQUIRE(norm(ref.lift.apply(fp) - fp - to_vec2(m)) <= 1e-12);
            const double expect_s = dot(f.nu_u, to_vec2(m)) / (f.mu - 1.0);
            const double expect_u = -dot(f.nu_s, to_vec2(m)) / (1.0 - f.lambda);
            CHECK(std::fabs(theta_s(ref.lift, ref.sc, fp, tol).coord.value - expect_s) <=
                  tol + 1e-12);
            CHECK(std::fabs(theta_u(ref.lift, ref.sc, fp, tol).coord.value - expect_u) <=
                  tol + 1e-12);
        }
    }

    SUBCASE("deeper recomputation agrees within the summed radii") {
        const perturbed_lift single(make_hyperbolic_matrix(2, 1, 1, 1),
                                    perturbation({fourier_term{{0, 1}, 0.0, 0.05, 0.0, 0.0}}));
        const shadow_constant sc =
            choose_shadow_constant(shadowing_constant(single, 512), single.frame().lambda, 0.1);
        const vec2 x{0.3, 0.7};
        const generalized_leaf_id id = theta_s(single, sc, x, tol);
        const leaf_interval deep = leaf_interval_at(single, sc, x, id.depth + 10);
        const double allowed =
            tol + sc.value * std::pow(single.frame().lambda, id.depth + 10);
        CHECK(std::fabs(id.coord.value - deep.center) <= allowed);
    }

    SUBCASE("certified containment in every candidate interval") {
        sample_stream rng(23);
        for (int i = 0; i < 100; ++i) {
            const vec2 x = rng.next_point();
            const generalized_leaf_id id = theta_s(ref.lift, ref.sc, x, tol);
            for (int n = 0; n <= id.depth; ++n) {
                const leaf_interval iv = leaf_interval_at(ref.lift, ref.sc, x, n);
                CHECK(iv.contains(id.coord.value, 1e-12));
            }
        }
    }

    SUBCASE("error paths") {
        CHECK_THROWS_AS(theta_s(ref.lift, ref.sc, {0.1, 0.1}, 1e-300), depth_overflow);
        CHECK_THROWS_AS(theta_s(ref.lift, ref.sc, {0.1, 0.1}, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(theta_s(ref.lift, ref.sc, {0.1, 0.1}, -1.0), std::invalid_argument);
    }

    SUBCASE("independence from the chosen constant") {
        sample_stream rng(29);
        shadow_constant scs[3];
        const double margins[3] = {0.01, 0.1, 1.0};
        for (int m = 0; m < 3; ++m)
            scs[m] = choose_shadow_constant(ref.c0, f.lambda, margins[m]);
        for (int i = 0; i < 200; ++i) {
            const vec2 x = rng.next_point();
            generalized_leaf_id ids[3];
            for (int m = 0; m < 3; ++m) ids[m] = theta_s(ref.lift, scs[m], x, tol);
            for (int m = 0; m < 3; ++m)
                for (int l = m + 1; l < 3; ++l)
                    CHECK(std::fabs(ids[m].coord.value - ids[l].coord.value) <=
                          ids[m].coord.error_radius + ids[l].coord.error_radius + 1e-12);
        }
    }
}

TEST_CASE("finite-depth membership") {
    SUBCASE("unperturbed membership is the straight band") {
        const perturbed_lift plain(make_hyperbolic_matrix(2, 1, 1, 1), perturbation{});
        const eigen_frame& f = plain.frame();
        shadow_constant sc;
        sc.value = 0.1;
        sample_stream rng(31);
        for (int i = 0; i < 100; ++i) {
            const double u0 = 2.0 * rng.next_unit() - 1.0;
            const double t = 2.0 * rng.next_unit() - 1.0;
            const vec2 on_leaf = u0 * f.nu_u + t * f.v_s;
            const leaf_coord leaf{leaf_kind::stable, u0};
            CHECK(membership_depth(plain, sc, on_leaf, leaf, 30));
            // a point displaced past C transversally fails at depth zero
            const vec2 off = on_leaf + (sc.value * 1.5) * f.nu_u;
            CHECK_FALSE(membership_depth(plain, sc, off, leaf, 0));
        }
    }

    SUBCASE("membership is equivalent to interval containment") {
        const reference_setup ref;
        sample_stream rng(37);
        for (int i = 0; i < 100; ++i) {
            const vec2 x = rng.next_point();
            // probe coordinates around the point's own interval
            const leaf_interval base = leaf_interval_at(ref.lift, ref.sc, x, 0);
            const double probe = base.lo + (base.hi - base.lo) * 1.2 * rng.next_unit();
            const leaf_coord leaf{leaf_kind::stable, probe};
            for (int depth : {0, 5, 12}) {
                bool contained = true;
                for (int n = 0; n <= depth && contained; ++n)
                    contained = leaf_interval_at(ref.lift, ref.sc, x, n).contains(probe);
                CHECK(membership_depth(ref.lift, ref.sc, x, leaf, depth) == contained);
            }
        }
    }

    SUBCASE("monotone in depth") {
        const reference_setup ref;
        sample_stream rng(41);
        for (int i = 0; i < 200; ++i) {
            const vec2 x = rng.next_point();
            const double probe = coord_u(ref.lift.frame(), x) +
                                 ref.sc.value * (2.0 * rng.next_unit() - 1.0);
            const leaf_coord leaf{leaf_kind::stable, probe};
            if (membership_depth(ref.lift, ref.sc, x, leaf, 10))
                CHECK(membership_depth(ref.lift, ref.sc, x, leaf, 5));
        }
    }
}

TEST_CASE("semiconjugacy") {
    const reference_setup ref;
    const eigen_frame& f = ref.lift.frame();
    const double tol = 1e-8;

    SUBCASE("unperturbed case is the linear coordinate pair") {
        anofol::run_config cfg = testsupport::unperturbed_config();
        const perturbed_lift plain = make_lift(cfg);
        const shadow_constant sc = make_shadow_constant(cfg, plain);
        const vec2 x{0.3, 0.7};
        const auto pair = semiconjugacy(plain, sc, x, tol);
        CHECK(pair.first.value == coord_u(plain.frame(), x));
        CHECK(pair.second.value == coord_s(plain.frame(), x));
    }

    SUBCASE("intertwines the lift with the diagonal model action") {
        sample_stream rng(43);
        for (int i = 0; i < 150; ++i) {
            const vec2 x = rng.next_point();
            const auto at_x = semiconjugacy(ref.lift, ref.sc, x, tol);
            const auto at_fx = semiconjugacy(ref.lift, ref.sc, ref.lift.apply(x), tol);
            CHECK(std::fabs(at_fx.first.value - f.mu * at_x.first.value) <=
                  at_fx.first.error_radius + f.mu * at_x.first.error_radius + 1e-12);
            CHECK(std::fabs(at_fx.second.value - f.lambda * at_x.second.value) <=
                  at_fx.second.error_radius + f.lambda * at_x.second.error_radius + 1e-12);
        }
    }

    SUBCASE("shifts by the covector values under deck translations") {
        sample_stream rng(47);
        for (int i = 0; i < 150; ++i) {
            const vec2 x = rng.next_point();
            const ivec2 k = rng.next_ivec(-3, 3);
            const auto at_x = semiconjugacy(ref.lift, ref.sc, x, tol);
            const auto at_xk = semiconjugacy(ref.lift, ref.sc, x + k, tol);
            CHECK(std::fabs(at_xk.first.value - at_x.first.value - dot(f.nu_u, to_vec2(k))) <=
                  at_xk.first.error_radius + at_x.first.error_radius + 1e-12);
            CHECK(std::fabs(at_xk.second.value - at_x.second.value - dot(f.nu_s, to_vec2(k))) <=
                  at_xk.second.error_radius + at_x.second.error_radius + 1e-12);
        }
    }
}

TEST_CASE("orbit divergence tracks") {
    const reference_setup ref;
    const eigen_frame& f = ref.lift.frame();
    const double tol = 1e-8;

    SUBCASE("identical points") {
        const auto track = orbit_divergence(ref.lift, {0.4, 0.9}, {0.4, 0.9}, 25);
        REQUIRE(track.size() == 26);
        for (const auto& s : track) {
            CHECK(s.du == 0.0);
            CHECK(s.ds == 0.0);
            CHECK(s.d == 0.0);
        }
    }

    SUBCASE("unperturbed pairs on a common stable leaf") {
        // the constructed pair carries a ~1e-16 unstable seed from rounding
        // v_s, and that seed genuinely grows like mu^n; the track must stay
        // at that scale and the stable part must follow the geometric law
        const perturbed_lift plain(make_hyperbolic_matrix(2, 1, 1, 1), perturbation{});
        const eigen_frame& pf = plain.frame();
        const vec2 x{0.2, 0.5};
        const vec2 y = x + 0.3 * pf.v_s;
        const auto track = orbit_divergence(plain, x, y, 40);
        CHECK(track[0].du <= 1e-12);
        double pow_mu = 1.0, pow_l = 1.0;
        for (const auto& s : track) {
            CHECK(s.du <= pow_mu * (track[0].du + 1e-15) + 1e-12);
            CHECK(s.ds <= pow_l * track[0].ds * (1.0 + 1e-12) + 1e-12);
            pow_mu *= pf.mu;
            pow_l *= pf.lambda;
        }
    }

    SUBCASE("separated coordinates force the growth lower bound") {
        sample_stream rng(53);
        for (int i = 0; i < 60; ++i) {
            const vec2 x = rng.next_point(), y = rng.next_point();
            const double tx = theta_s(ref.lift, ref.sc, x, tol).coord.value;
            const double ty = theta_s(ref.lift, ref.sc, y, tol).coord.value;
            const double delta = std::fabs(tx - ty);
            if (delta < 10.0 * tol) continue;
            const auto track = orbit_divergence(ref.lift, x, y, 40);
            double pow_mu = 1.0;
            for (const auto& s : track) {
                CHECK(s.du >= pow_mu * delta - 2.0 * ref.sc.value - 2.0 * tol * pow_mu -
                                  1e-9 * (1.0 + pow_mu));
                pow_mu *= f.mu;
            }
        }
    }

    SUBCASE("a constructed same-leaf pair stays together") {
        // partner built by bisection at tolerance 1e-13, so the true
        // coordinates agree to ~3e-13; that seed grows like mu^n, which
        // caps the meaningful track depth near 22 steps
        const vec2 x{0.31, 0.64};
        const vec2 y = testsupport::same_leaf_partner(ref.lift, ref.sc, x, 1e-13);
        const double tx = theta_s(ref.lift, ref.sc, x, 1e-13).coord.value;
        const double ty = theta_s(ref.lift, ref.sc, y, 1e-13).coord.value;
        REQUIRE(std::fabs(tx - ty) <= 3e-13);
        const auto track = orbit_divergence(ref.lift, x, y, 22);
        const double same_bound = 2.0 * ref.sc.value + track[0].ds +
                                  2.0 * ref.c0.upper_bound() / (1.0 - f.lambda);
        for (const auto& s : track) {
            CHECK(s.du <= 2.0 * ref.sc.value + 1e-3);
            CHECK(s.d <= same_bound + 1e-3);
        }
    }

    SUBCASE("depth validation") {
        CHECK_THROWS_AS(orbit_divergence(ref.lift, {0, 0}, {1, 1}, -1), std::invalid_argument);
        CHECK_THROWS_AS(orbit_divergence(ref.lift, {0, 0}, {1, 1}, 500), depth_overflow);
    }
}

TEST_CASE("continuity estimate on nearby pairs") {
    const reference_setup ref;
    const eigen_frame& f = ref.lift.frame();
    const double tol = 1e-8;
    const double lf = ref.lift.map_lipschitz();
    sample_stream rng(59);
    for (int i = 0; i < 200; ++i) {
        const vec2 x = rng.next_point();
        const double angle = 6.283185307179586 * rng.next_unit();
        const double r = 1e-6 * std::pow(1e3, rng.next_unit());
        const vec2 y = x + vec2{r * std::cos(angle), r * std::sin(angle)};
        const double d = dist(f, x, y);
        if (d > 1e-3) continue;
        const double tx = theta_s(ref.lift, ref.sc, x, tol).coord.value;
        const double ty = theta_s(ref.lift, ref.sc, y, tol).coord.value;
        double bound = 2.0 * ref.sc.value + d;
        double pow_l = 1.0, pow_ratio = 1.0;
        for (int n = 1; n <= 30; ++n) {
            pow_l *= f.lambda;
            pow_ratio *= f.lambda * lf;
            bound = std::min(bound, 2.0 * ref.sc.value * pow_l + pow_ratio * d);
        }
        CHECK(std::fabs(tx - ty) <= bound);
    }
}

TEST_CASE("leaf band sampling") {
    SUBCASE("unperturbed band matches the straight-line predicate") {
        const perturbed_lift plain(make_hyperbolic_matrix(2, 1, 1, 1), perturbation{});
        const eigen_frame& f = plain.frame();
        shadow_constant sc;
        sc.value = 0.1;
        const leaf_coord leaf{leaf_kind::stable, 0.0};
        const rect window{-0.5, 0.5, -0.5, 0.5};
        const int res = 101;
        const int depth = 4;
        const double halfwidth = sc.value * std::pow(f.lambda, depth);

        const auto hits = leaf_sample(plain, sc, leaf, window, res, depth);
        CHECK(!hits.empty());
        std::set<std::pair<double, double>> hit_set;
        for (const vec2& p : hits) {
            CHECK(std::fabs(coord_u(f, p)) <= halfwidth + 1e-9);
            hit_set.insert({p.x, p.y});
        }
        // every grid point strictly inside the band was returned
        const double hx = 1.0 / (res - 1);
        for (int i = 0; i < res; ++i)
            for (int j = 0; j < res; ++j) {
                const vec2 p{-0.5 + i * hx, -0.5 + j * hx};
                if (std::fabs(coord_u(f, p)) <= halfwidth * (1.0 - 1e-9) - 1e-12)
                    CHECK(hit_set.count({p.x, p.y}) == 1);
            }
    }

    SUBCASE("window far from the leaf yields the empty set") {
        const reference_setup ref;
        const leaf_coord leaf{leaf_kind::stable, 10.0};
        const auto hits = leaf_sample(ref.lift, ref.sc, leaf, {-0.5, 0.5, -0.5, 0.5}, 64, 3);
        CHECK(hits.empty());
    }

    SUBCASE("deeper sampling shrinks the band") {
        const reference_setup ref;
        const double u0 =
            theta_s(ref.lift, ref.sc, {0.0, 0.0}, 1e-8).coord.value;  // leaf through the origin
        const leaf_coord leaf{leaf_kind::stable, u0};
        const rect window{-0.5, 0.5, -0.5, 0.5};
        const auto shallow = leaf_sample(ref.lift, ref.sc, leaf, window, 64, 2);
        const auto deep = leaf_sample(ref.lift, ref.sc, leaf, window, 64, 7);
        CHECK(!deep.empty());
        CHECK(deep.size() < shallow.size());
        std::set<std::pair<double, double>> shallow_set;
        for (const vec2& p : shallow) shallow_set.insert({p.x, p.y});
        for (const vec2& p : deep) CHECK(shallow_set.count({p.x, p.y}) == 1);
    }

    SUBCASE("argument validation") {
        const reference_setup ref;
        const leaf_coord leaf{leaf_kind::stable, 0.0};
        CHECK_THROWS_AS(leaf_sample(ref.lift, ref.sc, leaf, {-0.5, 0.5, -0.5, 0.5}, 1, 3),
                        std::invalid_argument);
        CHECK_THROWS_AS(leaf_sample(ref.lift, ref.sc, leaf, {0.5, -0.5, -0.5, 0.5}, 8, 3),
                        std::invalid_argument);
    }
}
