#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spherloc/sampling.hpp"
#include "spherloc/waist.hpp"

using namespace spherloc;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent step-by-step oracle in extended precision: closed-form
// modulus, arcsines, and the definite sin-power recurrence
//   I_m[a,b] = (cos(a) sin^{m-1}(a) - cos(b) sin^{m-1}(b))/m + (m-1)/m I_{m-2}.
long double sin_power_oracle(int m, long double a, long double b) {
    long double even = b - a;
    long double odd = std::cos(a) - std::cos(b);
    if (m == 0) return even;
    if (m == 1) return odd;
    long double value = (m % 2 == 0) ? even : odd;
    for (int k = (m % 2 == 0) ? 2 : 3; k <= m; k += 2) {
        const long double boundary =
            (std::cos(a) * std::pow(std::sin(a), static_cast<long double>(k - 1)) -
             std::cos(b) * std::pow(std::sin(b), static_cast<long double>(k - 1))) /
            k;
        value = boundary + (k - 1.0L) / k * value;
    }
    return value;
}

long double waist_oracle(int n, int k, long double eps, bool lp4) {
    const long double half = eps / 2.0L;
    const long double delta =
        lp4 ? 1.0L - std::pow(1.0L - std::pow(half / 2.0L, 4.0L), 0.25L)
            : 1.0L - std::sqrt(1.0L - half * half / 4.0L);
    const long double s1 = 2.0L * std::asin(half / (4.0L * std::sqrt(k + 1.0L)));
    const long double s2 = 2.0L * std::asin(half / (2.0L * std::sqrt(k + 1.0L)));
    const long double F = sin_power_oracle(k - 1, s2, kPi / 2);
    const long double G = sin_power_oracle(k - 1, 0.0L, s1);
    long double kk = 1.0L;
    for (int i = 0; i <= k; ++i) kk *= k + 1.0L;
    return 1.0L / (1.0L + std::pow(1.0L - 2.0L * delta, static_cast<long double>(n - k)) * kk * F / G);
}

} // namespace

TEST_CASE("modulus of convexity") {
    CHECK(modulus(ModulusSpec::l2(), 0.0) == doctest::Approx(0.0).scale(1));
    CHECK(modulus(ModulusSpec::l2(), 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(modulus(ModulusSpec::lp(4.0), 1.0) ==
          doctest::Approx(0.01600516436728479073).epsilon(1e-13));
    CHECK_THROWS_AS(modulus(ModulusSpec::l2(), 2.5), DomainError);
    CHECK_THROWS_AS(modulus(ModulusSpec::l2(), -0.1), DomainError);
    CHECK_THROWS_AS(ModulusSpec::lp(1.5), DomainError);

    const ModulusSpec table = ModulusSpec::from_table({{0.5, 0.02}, {1.0, 0.1}, {2.0, 0.6}});
    CHECK(modulus(table, 0.25) == doctest::Approx(0.01).epsilon(1e-14));
    CHECK(modulus(table, 0.75) == doctest::Approx(0.06).epsilon(1e-14));
    CHECK(modulus(table, 2.0) == doctest::Approx(0.6).epsilon(1e-14));
    CHECK_THROWS_AS(ModulusSpec::from_table({{0.5, 0.2}, {0.4, 0.3}}), DomainError);
}

TEST_CASE("psi values") {
    CHECK(psi1(2, 0.0) == doctest::Approx(0.0).scale(1));
    CHECK(psi2(2, 0.0) == doctest::Approx(0.0).scale(1));
    CHECK(psi1(3, 2.0) == doctest::Approx(0.50536051028415730697).epsilon(1e-13));
    for (double eps = 0.0; eps <= 2.0; eps += 0.25)
        CHECK(psi2(4, eps) >= psi1(4, eps));
    CHECK_THROWS_AS(psi2(1, 4.0), DomainError);
}

TEST_CASE("F and G integrals") {
    CHECK(waist_F(1, 0.0) == doctest::Approx(kPi / 2).epsilon(1e-13));
    for (int k = 1; k <= 5; ++k) CHECK(waist_G(k, 0.0) == doctest::Approx(0.0).scale(1));
    // F(2, eps) = cos(psi2(eps)) in closed form
    for (double eps = 0.1; eps <= 2.0; eps += 0.3)
        CHECK(waist_F(2, eps) == doctest::Approx(std::cos(psi2(2, eps))).epsilon(1e-10));
}

TEST_CASE("waist bound values against the step-chain oracle") {
    const WaistParams p{4, 1, ModulusSpec::l2()};
    CHECK(waist_bound(p, 0.0) == doctest::Approx(0.0).scale(1));
    // frozen from the extended-precision chain
    CHECK(waist_bound(p, 1.0) == doctest::Approx(0.042449419346788159771).epsilon(1e-10));

    Rng rng(303);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform_int(2, 8);
        const int k = rng.uniform_int(1, n - 1);
        const double eps = rng.uniform(0.05, 1.8);
        const bool lp4 = rng.uniform01() < 0.5;
        const WaistParams params{n, k, lp4 ? ModulusSpec::lp(4.0) : ModulusSpec::l2()};
        const double expected = static_cast<double>(waist_oracle(n, k, eps, lp4));
        CHECK(waist_bound(params, eps) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("waist bound is monotone and within [0, 1)") {
    for (const ModulusSpec& space : {ModulusSpec::l2(), ModulusSpec::lp(4.0)}) {
        const WaistParams p{6, 2, space};
        double prev = 0.0;
        for (double eps = 0.0; eps <= 1.8 + 1e-9; eps += 0.05) {
            const double w = waist_bound(p, eps);
            CHECK(w >= prev - 1e-15);
            CHECK(w >= 0.0);
            CHECK(w < 1.0);
            if (eps > 0.0) CHECK(w > 0.0);
            prev = w;
        }
    }
}

TEST_CASE("smaller modulus never increases the bound") {
    // two tables on the same nodes, one pointwise half the other
    std::vector<std::pair<double, double>> full_pairs, half_pairs;
    for (double e = 0.25; e <= 2.0; e += 0.25) {
        const double d = modulus(ModulusSpec::l2(), e);
        full_pairs.emplace_back(e, d);
        half_pairs.emplace_back(e, 0.5 * d);
    }
    const ModulusSpec full = ModulusSpec::from_table(std::move(full_pairs));
    const ModulusSpec half = ModulusSpec::from_table(std::move(half_pairs));
    for (double eps = 0.1; eps <= 1.8; eps += 0.2) {
        const double w_full = waist_bound({5, 2, full}, eps);
        const double w_half = waist_bound({5, 2, half}, eps);
        CHECK(w_half <= w_full + 1e-12);
    }
}

TEST_CASE("round tube volume") {
    CHECK(tube_volume_round(2, 1, 0.6) == doctest::Approx(std::sin(0.6)).epsilon(1e-11));
    CHECK(tube_volume_round(3, 2, 0.7) == doctest::Approx(0.41501642854987953069).epsilon(1e-11));
    for (int n = 2; n <= 8; ++n) {
        for (int k = 1; k < n; ++k) {
            CHECK(tube_volume_round(n, k, 0.0) == doctest::Approx(0.0).scale(1));
            CHECK(tube_volume_round(n, k, kPi / 2) == doctest::Approx(1.0).epsilon(1e-12));
            double prev = 0.0;
            for (double eps = 0.1; eps < kPi / 2; eps += 0.2) {
                const double v = tube_volume_round(n, k, eps);
                CHECK(v > prev);
                prev = v;
            }
        }
    }
    CHECK_THROWS_AS(tube_volume_round(3, 1, 2.0), DomainError);
}

TEST_CASE("the two coordinate bands partition the sphere") {
    // complement of the band around S^{n-k} is the band around S^{k-1}
    for (int n = 2; n <= 8; ++n) {
        for (int k = 1; k < n; ++k) {
            for (double eps = 0.0; eps <= kPi / 2 + 1e-12; eps += kPi / 8) {
                const double sum = tube_volume_round(n, k, std::min(eps, kPi / 2)) +
                                   tube_volume_round(n, n - k + 1, kPi / 2 - std::min(eps, kPi / 2));
                CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("L2 waist bound stays below the round tube volume") {
    for (int n = 2; n <= 8; ++n) {
        for (int k = 1; k < n; ++k) {
            for (double eps = 0.1; eps <= kPi / 2; eps += 0.1) {
                const double w = waist_bound({n, k, ModulusSpec::l2()}, eps);
                const double tube = tube_volume_round(n, k, eps);
                CHECK(w <= tube + 1e-9);
            }
        }
    }
}
