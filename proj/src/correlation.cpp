#include "spherloc/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "spherloc/needle.hpp"

namespace spherloc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

double gamma2_of(const ConvexBody2D& body, const QuadratureSpec& spec) {
    const auto f = [&body](double t) { return gaussian_radial_integral(2, body.radial(t)); };
    return integrate_interval(f, 0.0, kTwoPi, spec) / kTwoPi;
}

struct ConeFactors {
    double whole;
    double both;
    double first;
    double second;
};

ConeFactors cone_factors(const Cone2D& cone, double t0, int n, const ConvexBody2D& K1,
                         const ConvexBody2D& K2, const QuadratureSpec& spec) {
    const ConeMeasure2D cm(cone, t0, n - 2, RadialWeight::gaussian(n));
    ConeFactors f;
    f.whole = cone_body_measure(cm, ConvexBody2D::whole_plane(), spec);
    f.both = cone_body_measure(cm, intersect(K1, K2), spec);
    f.first = cone_body_measure(cm, K1, spec);
    f.second = cone_body_measure(cm, K2, spec);
    return f;
}

nlohmann::json cone_params(const Cone2D& cone, double t0, int n, const ConvexBody2D& K1,
                           const ConvexBody2D& K2) {
    return nlohmann::json{{"cone", {cone.t_lo, cone.t_hi}},
                          {"t0", t0},
                          {"n", n},
                          {"K1", K1.describe()},
                          {"K2", K2.describe()}};
}

} // namespace

double sector_function(const ConvexBody2D& K, int n, double u) {
    return gaussian_radial_integral(n, K.radial(u));
}

InequalityReport check_full_correlation_2d(const ConvexBody2D& K1, const ConvexBody2D& K2,
                                           const QuadratureSpec& spec) {
    // The verdict tolerance sits at 1e-10 and strip pairs can be exact
    // equality cases, so the masses are resolved well past it.
    QuadratureSpec tight = spec.scaled(0.01);
    tight.max_subdivisions = std::max(tight.max_subdivisions, 4 * spec.max_subdivisions);
    const double g_both = gamma2_of(intersect(K1, K2), tight);
    const double g1 = gamma2_of(K1, tight);
    const double g2 = gamma2_of(K2, tight);
    nlohmann::json params{{"K1", K1.describe()},
                          {"K2", K2.describe()},
                          {"gamma_intersection", g_both},
                          {"gamma_K1", g1},
                          {"gamma_K2", g2}};
    return InequalityReport::lower_bound(g_both, g1 * g2, 1e-10, std::move(params));
}

InequalityReport check_cone_inequality(const Cone2D& cone, double t0, int n,
                                       const ConvexBody2D& K1, const ConvexBody2D& K2,
                                       const QuadratureSpec& spec) {
    if (n < 2) throw DomainError("check_cone_inequality: requires n >= 2");
    const ConeFactors f = cone_factors(cone, t0, n, K1, K2, spec);
    nlohmann::json params = cone_params(cone, t0, n, K1, K2);
    params["factors"] = {f.whole, f.both, f.first, f.second};
    return InequalityReport::lower_bound(f.whole * f.both, f.first * f.second, 1e-10,
                                         std::move(params));
}

InequalityReport needle_cone_consistency(const Cone2D& cone, double t0, int n,
                                         const ConvexBody2D& K1, const ConvexBody2D& K2,
                                         const QuadratureSpec& spec) {
    if (n < 2) throw DomainError("needle_cone_consistency: requires n >= 2");

    // Cone route.
    const ConeFactors f = cone_factors(cone, t0, n, K1, K2, spec);
    if (f.first < 1e-250 || f.second < 1e-250)
        throw DivisionByZero("needle_cone_consistency: a cone factor vanishes");
    const double ratio_cone = (f.whole * f.both) / (f.first * f.second);

    // Needle route: sector functions against the normalized needle density.
    const NeedleDensity needle = needle_normalize(
        NeedleDensity::cosine_form(n - 2, t0, cone.t_lo, cone.t_hi), spec);
    const ConvexBody2D both = intersect(K1, K2);
    const auto sector = [n](const ConvexBody2D& body) {
        return [&body, n](double t) { return sector_function(body, n, t); };
    };
    const ConvexBody2D plane = ConvexBody2D::whole_plane();
    const double i_whole = needle_integrate(needle, sector(plane), spec);
    const double i_both = needle_integrate(needle, sector(both), spec);
    const double i_first = needle_integrate(needle, sector(K1), spec);
    const double i_second = needle_integrate(needle, sector(K2), spec);
    if (i_first < 1e-250 || i_second < 1e-250)
        throw DivisionByZero("needle_cone_consistency: a needle factor vanishes");
    const double ratio_needle = (i_whole * i_both) / (i_first * i_second);

    if (!(std::abs(ratio_cone) > 1e-300))
        throw DivisionByZero("needle_cone_consistency: cone ratio vanishes");

    nlohmann::json params = cone_params(cone, t0, n, K1, K2);
    params["ratio_needle"] = ratio_needle;
    params["ratio_cone"] = ratio_cone;
    return InequalityReport::agreement(ratio_needle / ratio_cone, 1.0, 1e-8, std::move(params));
}

namespace {

// ----------------------------------------------------------------------
// Strip counterexample hunt
// ----------------------------------------------------------------------

struct StripCandidate {
    int n = 3;
    double t0 = 0.0;
    double lo = 0.0;
    double hi = 1.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double w1 = 1.0;
    double w2 = 1.0;
};

double candidate_ratio(const StripCandidate& c, const QuadratureSpec& spec) {
    if (c.hi - c.lo < 0.05 || c.hi - c.lo > kPi) return std::numeric_limits<double>::infinity();
    if (c.t0 < 0.0 || c.t0 > kPi) return std::numeric_limits<double>::infinity();
    if (!cos_nonnegative_on(c.t0, c.lo, c.hi)) return std::numeric_limits<double>::infinity();
    const ConvexBody2D s1 = ConvexBody2D::strip(c.alpha1, c.w1);
    const ConvexBody2D s2 = ConvexBody2D::strip(c.alpha2, c.w2);
    const ConeFactors f = cone_factors(Cone2D(c.lo, c.hi), c.t0, c.n, s1, s2, spec);
    if (f.first < 1e-12 || f.second < 1e-12) return std::numeric_limits<double>::infinity();
    return (f.whole * f.both) / (f.first * f.second);
}

nlohmann::json candidate_json(const StripCandidate& c) {
    return nlohmann::json{{"n", c.n},
                          {"t0", c.t0},
                          {"cone", {c.lo, c.hi}},
                          {"strip1", {{"normal_angle", c.alpha1}, {"half_width", c.w1}}},
                          {"strip2", {{"normal_angle", c.alpha2}, {"half_width", c.w2}}}};
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

StripCandidate random_candidate(std::mt19937_64& rng) {
    StripCandidate c;
    c.n = 3 + static_cast<int>(rng() % 6);
    c.t0 = uniform01(rng) * kPi;
    const double window_lo = -c.t0 - kHalfPi;
    const double length = 0.15 + uniform01(rng) * (kPi - 0.15);
    c.lo = window_lo + uniform01(rng) * (kPi - length);
    c.hi = c.lo + length;
    c.alpha1 = uniform01(rng) * kPi;
    // Half the proposals pair a nearly perpendicular second strip, where the
    // sector functions are anticorrelated along the cone.
    if (rng() & 1)
        c.alpha2 = c.alpha1 + kHalfPi + 0.2 * (uniform01(rng) - 0.5);
    else
        c.alpha2 = uniform01(rng) * kPi;
    c.w1 = std::exp(std::log(0.02) + uniform01(rng) * (std::log(2.5) - std::log(0.02)));
    c.w2 = std::exp(std::log(0.02) + uniform01(rng) * (std::log(2.5) - std::log(0.02)));
    return c;
}

// Deterministic coordinate descent on the ratio; every evaluation counts
// against the caller's budget.
StripCandidate refine_candidate(StripCandidate best, double& best_ratio, long long budget,
                                long long& used, const QuadratureSpec& spec) {
    double step_t0 = 0.1, step_edge = 0.1, step_angle = 0.1, step_logw = 0.25;
    while (used < budget) {
        bool improved = false;
        const auto try_move = [&](auto&& mutate) {
            if (used >= budget) return;
            StripCandidate trial = best;
            mutate(trial);
            ++used;
            const double r = candidate_ratio(trial, spec);
            if (r < best_ratio) {
                best_ratio = r;
                best = trial;
                improved = true;
            }
        };
        for (double sign : {+1.0, -1.0}) {
            try_move([&](StripCandidate& t) { t.t0 = std::clamp(t.t0 + sign * step_t0, 0.0, kPi); });
            try_move([&](StripCandidate& t) { t.lo += sign * step_edge; });
            try_move([&](StripCandidate& t) { t.hi += sign * step_edge; });
            try_move([&](StripCandidate& t) { t.alpha1 += sign * step_angle; });
            try_move([&](StripCandidate& t) { t.alpha2 += sign * step_angle; });
            try_move([&](StripCandidate& t) { t.w1 = std::max(0.005, t.w1 * std::exp(sign * step_logw)); });
            try_move([&](StripCandidate& t) { t.w2 = std::max(0.005, t.w2 * std::exp(sign * step_logw)); });
        }
        if (!improved) {
            step_t0 *= 0.5;
            step_edge *= 0.5;
            step_angle *= 0.5;
            step_logw *= 0.5;
            if (step_edge < 1e-4) break;
        }
    }
    return best;
}

} // namespace

HuntResult hunt_strip_counterexample(std::uint64_t seed, long long budget,
                                     const QuadratureSpec& spec, ExecMode mode) {
    HuntResult result;
    result.best_ratio = std::numeric_limits<double>::infinity();
    if (budget < 1) return result;

    // Scan with loosened tolerances, confirm finalists at the caller's spec.
    const QuadratureSpec scan_spec = spec.scaled(100.0);

    std::mt19937_64 rng(seed);
    const long long random_budget = std::max<long long>(1, (budget * 3) / 5);
    std::vector<StripCandidate> candidates(static_cast<std::size_t>(random_budget));
    for (auto& c : candidates) c = random_candidate(rng);

    std::vector<double> ratios(candidates.size());
    for_each_index(candidates.size(), mode,
                   [&](std::size_t i) { ratios[i] = candidate_ratio(candidates[i], scan_spec); });
    result.evaluations = random_budget;

    std::size_t best_index = 0;
    for (std::size_t i = 1; i < ratios.size(); ++i)
        if (ratios[i] < ratios[best_index]) best_index = i;

    StripCandidate best = candidates[best_index];
    double best_ratio = ratios[best_index];
    if (std::isfinite(best_ratio)) {
        long long used = 0;
        best = refine_candidate(best, best_ratio, budget - random_budget, used, scan_spec);
        result.evaluations += used;
    }

    // Confirm at full precision.
    const double verified = candidate_ratio(best, spec);
    result.best_ratio = verified;
    result.best_params = candidate_json(best);
    if (verified < 1.0 - 10.0 * spec.abs_tol) {
        const ConeFactors f = cone_factors(Cone2D(best.lo, best.hi), best.t0, best.n,
                                           ConvexBody2D::strip(best.alpha1, best.w1),
                                           ConvexBody2D::strip(best.alpha2, best.w2), spec);
        Witness w;
        w.params = result.best_params;
        w.ratio = verified;
        w.margin = f.whole * f.both - f.first * f.second;
        result.witness = w;
    }
    return result;
}

std::vector<std::pair<double, double>> admissible_t0_windows(const Cone2D& cone, int n) {
    if (n < 2) throw DomainError("admissible_t0_windows: requires n >= 2");
    if (n == 2) return {{0.0, kPi}};
    std::vector<std::pair<double, double>> windows;
    for (int k = -2; k <= 2; ++k) {
        const double lo = std::max(0.0, 2.0 * kPi * k - kHalfPi - cone.t_lo);
        const double hi = std::min(kPi, 2.0 * kPi * k + kHalfPi - cone.t_hi);
        if (lo <= hi) windows.emplace_back(lo, hi);
    }
    if (windows.empty())
        throw EmptyAdmissibleSet("find_t0: no phase in [0, pi] keeps the density nonnegative");
    return windows;
}

T0SearchResult find_t0(const Cone2D& cone, int n, const ConvexBody2D& K1,
                       const ConvexBody2D& K2, int grid_size, const QuadratureSpec& spec,
                       ExecMode mode) {
    if (grid_size < 2) throw DomainError("find_t0: grid_size must be >= 2");
    const auto windows = admissible_t0_windows(cone, n);

    // Uniform grid over [0, pi] filtered to the admissible windows, plus the
    // window endpoints themselves so narrow windows are never missed.
    std::vector<double> grid;
    for (int i = 0; i < grid_size; ++i) {
        const double t0 = kPi * static_cast<double>(i) / (grid_size - 1);
        for (const auto& [lo, hi] : windows)
            if (t0 >= lo && t0 <= hi) {
                grid.push_back(t0);
                break;
            }
    }
    for (const auto& [lo, hi] : windows) {
        grid.push_back(lo);
        grid.push_back(hi);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<double> margins(grid.size());
    for_each_index(grid.size(), mode, [&](std::size_t i) {
        const ConeFactors f = cone_factors(cone, grid[i], n, K1, K2, spec);
        margins[i] = f.whole * f.both - f.first * f.second;
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < margins.size(); ++i)
        if (margins[i] > margins[best]) best = i;

    T0SearchResult result;
    result.best_t0 = grid[best];
    result.best_margin = margins[best];
    if (result.best_margin >= -spec.abs_tol) result.t0 = grid[best];
    return result;
}

} // namespace spherloc
