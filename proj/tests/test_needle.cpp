#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spherloc/needle.hpp"
#include "spherloc/sampling.hpp"

using namespace spherloc;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("needle_normalize on known densities") {
    const NeedleDensity uniform = needle_normalize(NeedleDensity(0, 0.0, 0.0, kPi));
    CHECK(uniform.scale() == doctest::Approx(1.0 / kPi).epsilon(1e-13));

    const NeedleDensity sine = needle_normalize(NeedleDensity(1, 0.0, 0.0, kPi));
    CHECK(sine.scale() == doctest::Approx(0.5).epsilon(1e-12));

    // sin_power_integral(3, 0, pi/2) = 2/3
    const NeedleDensity cubed = needle_normalize(NeedleDensity(3, 0.0, 0.0, kPi / 2));
    CHECK(cubed.scale() == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("needle construction rejects invalid supports") {
    CHECK_THROWS_AS(NeedleDensity(1, 0.0, 0.0, 3.5), DomainError);   // longer than pi
    CHECK_THROWS_AS(NeedleDensity(1, 0.0, 1.0, 1.0), DomainError);   // empty
    CHECK_THROWS_AS(NeedleDensity(1, 0.0, -0.5, 0.5), DomainError);  // sign change
    CHECK_THROWS_AS(NeedleDensity(2, kPi, 0.5, 1.5), DomainError);   // sin(t+pi) < 0 there
    CHECK_NOTHROW(NeedleDensity(0, kPi, 0.5, 1.5));                  // uniform: no constraint
    CHECK_NOTHROW(NeedleDensity(2, 0.0, 0.0, kPi));
    // degenerate: support squeezed against the sine zero underflows to 0
    CHECK_THROWS_AS(needle_normalize(NeedleDensity(3, 0.0, 0.0, 1e-200)), DegenerateNeedle);
}

TEST_CASE("from_dimensions maps (n, k) to the exponent") {
    const NeedleDensity d = NeedleDensity::from_dimensions(4, 1, 0.0, 0.0, kPi);
    CHECK(d.exponent() == 3);
    CHECK(NeedleDensity::from_dimensions(3, 3, 0.7, 0.0, 1.0).exponent() == 0);
    CHECK_THROWS_AS(NeedleDensity::from_dimensions(1, 1, 0.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(NeedleDensity::from_dimensions(3, 4, 0.0, 0.0, 1.0), DomainError);
}

TEST_CASE("needle_integrate on known integrands") {
    const NeedleDensity uniform = needle_normalize(NeedleDensity(0, 0.0, 0.0, kPi));
    CHECK(needle_integrate(uniform, [](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(needle_integrate(uniform, [](double t) { return t; }) ==
          doctest::Approx(kPi / 2).epsilon(1e-12));

    const NeedleDensity sine = needle_normalize(NeedleDensity(1, 0.0, 0.0, kPi));
    CHECK(needle_integrate(sine, [](double t) { return std::sin(t); }) ==
          doctest::Approx(kPi / 4).epsilon(1e-12));

    CHECK_THROWS_AS(needle_integrate(NeedleDensity(1, 0.0, 0.0, kPi), [](double) { return 1.0; }),
                    DomainError);
}

TEST_CASE("positivity and monotonicity of needle integrals") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = rng.uniform_int(0, 5);
        const double lo = rng.uniform(0.0, 1.0);
        const double hi = lo + rng.uniform(0.2, kPi - lo - 1e-3);
        const NeedleDensity d = needle_normalize(NeedleDensity(m, 0.0, lo, hi));
        const double c0 = rng.uniform(0.1, 2.0), c1 = rng.uniform(-0.3, 0.3);
        const auto f = [&](double t) { return c0 + c1 * std::sin(t); };
        const auto g = [&](double t) { return f(t) + rng.uniform01() * 0.0 + 0.25; };
        const double fi = needle_integrate(d, f);
        CHECK(fi > 0.0);
        CHECK(fi <= needle_integrate(d, g));
    }
}

TEST_CASE("cosine phase form matches the sine form") {
    Rng rng(29);
    for (int trial = 0; trial < 12; ++trial) {
        const int m = rng.uniform_int(1, 6);
        const double t0 = rng.uniform(0.0, kPi);
        const double lo = -t0 - kPi / 2 + rng.uniform(0.0, 0.8);
        const double hi = lo + rng.uniform(0.3, kPi - 0.9);
        const NeedleDensity cosine = needle_normalize(NeedleDensity::cosine_form(m, t0, lo, hi));
        const NeedleDensity sine =
            needle_normalize(NeedleDensity(m, t0 + kPi / 2, lo, hi));
        const auto f = [](double t) { return 0.7 + std::cos(t); };
        CHECK(needle_integrate(cosine, f) ==
              doctest::Approx(needle_integrate(sine, f)).epsilon(1e-12));
        for (double t = lo; t < hi; t += 0.1)
            CHECK(cosine.density(t) ==
                  doctest::Approx(pow_int(std::cos(t + t0), m) * cosine.scale()).epsilon(1e-12));
    }
}

TEST_CASE("sphere_integrate basic values") {
    const SphereFn one = [](std::span<const double>) { return 1.0; };
    CHECK(sphere_integrate(2, one) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sphere_integrate(3, one) == doctest::Approx(1.0).epsilon(1e-10));

    const SphereFn coord = [](std::span<const double> p) { return p[0]; };
    CHECK(sphere_integrate(2, coord) == doctest::Approx(0.0).scale(1).epsilon(1e-10));
    CHECK(sphere_integrate(3, coord) == doctest::Approx(0.0).scale(1).epsilon(1e-10));

    const SphereFn coord2 = [](std::span<const double> p) { return p[0] * p[0]; };
    CHECK(sphere_integrate(2, coord2) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(sphere_integrate(3, coord2) == doctest::Approx(0.25).epsilon(1e-9));

    CHECK_THROWS_AS(sphere_integrate(4, one), DomainError);
}

TEST_CASE("meridian fubini margins") {
    const SphereFn one = [](std::span<const double>) { return 1.0; };
    const InequalityReport trivial = meridian_fubini_check(2, one, 8);
    CHECK(std::abs(trivial.margin) <= 1e-9);
    CHECK(trivial.holds);

    // zonal function of the polar angle only: both sides reduce to the same
    // one-dimensional integral
    const SphereFn zonal = [](std::span<const double> p) {
        const double z = p.back();
        return std::exp(z) + z * z;
    };
    CHECK(std::abs(meridian_fubini_check(2, zonal, 4).margin) <= 1e-8);

    // random low-degree polynomial on S^3 against the brute-force quadrature
    Rng rng(101);
    double c[4][4];
    for (auto& row : c)
        for (double& v : row) v = rng.uniform(-1.0, 1.0);
    const SphereFn poly = [&c](std::span<const double> p) {
        double s = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) s += c[i][j] * p[i] * p[j] * (1.0 + 0.5 * p[(i + j) % 4]);
        return s;
    };
    const InequalityReport cubic = meridian_fubini_check(3, poly, 24);
    CHECK(std::abs(cubic.margin) <= 1e-6);
}

TEST_CASE("meridian average tightens with directions and tolerance") {
    const SphereFn lumpy = [](std::span<const double> p) {
        return std::exp(p[0]) + std::sin(2.0 * p[1]) * p[2];
    };
    QuadratureSpec loose;
    loose.abs_tol = 1e-6;
    loose.rel_tol = 1e-5;
    const double coarse = std::abs(meridian_fubini_check(2, lumpy, 6, loose).margin);
    const double fine = std::abs(meridian_fubini_check(2, lumpy, 48).margin);
    CHECK(fine <= coarse + 1e-12);
    CHECK(fine <= 1e-8);
}
