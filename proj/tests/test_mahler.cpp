#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spherloc/mahler.hpp"
#include "spherloc/sampling.hpp"

using namespace spherloc;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

Cone2D admissible_interval(Rng& rng, double theta) {
    const double lo = -theta - kHalfPi + rng.uniform(0.02, 0.8);
    return Cone2D(lo, lo + rng.uniform(0.2, 1.5));
}
} // namespace

TEST_CASE("alpha term is 1/(n+1)^2 on disks") {
    Rng rng(8);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            const double theta = rng.uniform(0.0, kPi);
            const Cone2D interval = admissible_interval(rng, theta);
            const double radius = rng.uniform(1.0 + 1e-6, std::sqrt(n + 1.0));
            const double v = alpha_term(n, theta, interval, ConvexBody2D::disk(radius));
            CHECK(v == doctest::Approx(1.0 / ((n + 1.0) * (n + 1.0))).epsilon(1e-8));
        }
    }
}

TEST_CASE("alpha term rejects bad inputs") {
    // sandwich: disk of radius 1 is not strictly larger than the unit ball
    CHECK_THROWS_AS(alpha_term(4, 0.0, Cone2D(-1.0, 0.0), ConvexBody2D::disk(1.0)),
                    SandwichViolation);
    CHECK_THROWS_AS(alpha_term(4, 0.0, Cone2D(-1.0, 0.0), ConvexBody2D::disk(5.0)),
                    SandwichViolation);
    // interval outside the admissible arc of theta
    CHECK_THROWS_AS(alpha_term(4, kHalfPi, Cone2D(-0.5, 0.5), ConvexBody2D::disk(1.5)),
                    PhaseDomain);
    // degenerate interval: angular mass collapses near the arc boundary
    CHECK_THROWS_AS(alpha_term(6, 0.0, Cone2D(kHalfPi - 1e-9, kHalfPi - 1e-10),
                               ConvexBody2D::disk(1.5)),
                    DegenerateInterval);
}

TEST_CASE("alpha term is scale invariant under the power weight") {
    Rng rng(40);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = rng.uniform_int(2, 5);
        Rng body_rng(900 + trial);
        const ConvexBody2D body =
            random_symmetric_polygon(body_rng, 6, 1.15, 0.93 * std::sqrt(n + 1.0));
        const double lambda = rng.uniform(1.005, 1.03);
        std::vector<Vec2> scaled;
        for (const Vec2& v : body.as_polygon().vertices) scaled.push_back(v * lambda);
        const ConvexBody2D larger = ConvexBody2D::polygon(std::move(scaled));
        if (!ball_sandwich_check(larger, 1.0, std::sqrt(n + 1.0))) continue;

        const double theta = rng.uniform(0.0, kPi);
        const Cone2D interval = admissible_interval(rng, theta);
        const double base = alpha_term(n, theta, interval, body);
        const double grown = alpha_term(n, theta, interval, larger);
        CHECK(grown == doctest::Approx(base).epsilon(1e-8));
    }
}

TEST_CASE("alpha term against the brute-force cone measures") {
    const int n = 3;
    const double a = 1.25; // square inside the sqrt((n+1)/2) corner bound
    const ConvexBody2D square =
        ConvexBody2D::polygon({{a, a}, {-a, a}, {-a, -a}, {a, -a}});
    const double theta = 0.35;
    const Cone2D interval(-theta - 1.1, -theta + 0.3);
    const double direct = alpha_term(n, theta, interval, square);

    const ConeMeasure2D cm(interval, theta, n - 1, RadialWeight::power(n));
    const double num1 = brute_force_cone_measure(cm, square, 2000);
    const double num2 = brute_force_cone_measure(cm, polar_dual(square), 2000);
    const double denom = cos_power_integral(n - 1, interval.t_lo + theta, interval.t_hi + theta);
    CHECK(direct == doctest::Approx(num1 * num2 / (denom * denom)).epsilon(1e-4));
}

TEST_CASE("alpha_for_body on the disk is grid independent") {
    AlphaSearchConfig config;
    config.theta_grid = 9;
    config.interval_grid = 6;
    config.refine_iters = 6;
    for (int n : {2, 4}) {
        const AlphaForBodyResult r =
            alpha_for_body(n, ConvexBody2D::disk(0.5 * (1.0 + std::sqrt(n + 1.0))), config);
        CHECK(r.value == doctest::Approx(1.0 / ((n + 1.0) * (n + 1.0))).epsilon(1e-7));
    }
}

TEST_CASE("finer interval grids never raise the inner minimum") {
    const ConvexBody2D square =
        ConvexBody2D::polygon({{1.2, 1.2}, {-1.2, 1.2}, {-1.2, -1.2}, {1.2, -1.2}});
    AlphaSearchConfig coarse;
    coarse.theta_grid = 7;
    coarse.interval_grid = 6;
    coarse.refine_iters = 0;
    AlphaSearchConfig fine = coarse;
    fine.interval_grid = 12;
    const int n = 3;
    const double v_coarse = alpha_for_body(n, square, coarse).value;
    const double v_fine = alpha_for_body(n, square, fine).value;
    CHECK(v_fine <= v_coarse + 1e-9);
}

TEST_CASE("octagon value is reproduced by a dense-grid evaluation") {
    const double c = 1.45, s = c / (1.0 + std::sqrt(2.0)); // regular octagon, n = 4 sandwich
    std::vector<Vec2> verts{{c, s}, {s, c}, {-s, c}, {-c, s}, {-c, -s}, {-s, -c}, {s, -c}, {c, -s}};
    const ConvexBody2D octagon = ConvexBody2D::polygon(std::move(verts));
    const int n = 4;
    REQUIRE(ball_sandwich_check(octagon, 1.0, std::sqrt(n + 1.0)));

    AlphaSearchConfig config;
    config.theta_grid = 13;
    config.interval_grid = 10;
    config.refine_iters = 16;
    const double value = alpha_for_body(n, octagon, config).value;

    AlphaSearchConfig dense = config;
    dense.theta_grid = 10 * config.theta_grid;
    dense.interval_grid = 40;
    dense.refine_iters = 0;
    const double oracle = alpha_for_body(n, octagon, dense).value;
    CHECK(value == doctest::Approx(oracle).epsilon(1e-3));
}

TEST_CASE("alpha estimate includes the disk and stays below its value") {
    AlphaSearchConfig config;
    config.theta_grid = 9;
    config.interval_grid = 6;
    config.refine_iters = 4;
    config.sample_count = 0;
    const AlphaEstimateResult disk_only = alpha_estimate(3, config);
    CHECK(disk_only.value == doctest::Approx(1.0 / 16.0).epsilon(1e-7));
    CHECK(disk_only.best_sample_index == -1);

    config.sample_count = 3;
    config.seed = 4242;
    const AlphaEstimateResult sampled = alpha_estimate(3, config);
    CHECK(sampled.value <= 1.0 / 16.0 + 1e-8);
    CHECK(sampled.samples_evaluated == 3);

    // identical seed, identical result
    const AlphaEstimateResult replay = alpha_estimate(3, config);
    CHECK(replay.value == sampled.value);
    CHECK(replay.best.theta == sampled.best.theta);
}

TEST_CASE("mahler bound identities") {
    for (int n : {4, 5, 6}) {
        const MahlerBoundResult r = mahler_bound(n, 1.0 / (n * n));
        const double ball = reference_volume_product(RefBody::ball, n);
        CHECK(r.bound == doctest::Approx(ball).epsilon(1e-12));
        CHECK(r.surface_form == doctest::Approx(r.bound).epsilon(1e-12));
    }
    CHECK(mahler_bound(4, 0.0625).bound == doctest::Approx(std::pow(kPi, 4) / 4.0).epsilon(1e-12));
    CHECK_THROWS_AS(mahler_bound(3, 0.1), DomainError);
    CHECK_NOTHROW(mahler_bound(3, 0.1, true));
    CHECK_THROWS_AS(mahler_bound(5, 1.5), DomainError);
}
