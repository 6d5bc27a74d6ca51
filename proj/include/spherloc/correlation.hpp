#pragma once

#include <cstdint>
#include <optional>

#include "spherloc/conemeasure.hpp"
#include "spherloc/convex2d.hpp"
#include "spherloc/parallel.hpp"
#include "spherloc/report.hpp"

namespace spherloc {

/// Radially weighted mass of the ray through direction u inside K:
/// the Gaussian radial integral up to rho_K(u).
double sector_function(const ConvexBody2D& K, int n, double u);

/// Full-dimensional Gaussian correlation check in the plane:
/// gamma_2(R^2) gamma_2(K1 cap K2) >= gamma_2(K1) gamma_2(K2),
/// each factor evaluated by angular integration of sector functions.
InequalityReport check_full_correlation_2d(const ConvexBody2D& K1, const ConvexBody2D& K2,
                                           const QuadratureSpec& spec = {});

/// Cone-level inequality with the weighted measure (Gaussian r^{n-1}e^{-r^2/2},
/// angular exponent n-2, phase t0):
/// mu(C) mu(K1 cap K2 cap C) >= mu(K1 cap C) mu(K2 cap C).
InequalityReport check_cone_inequality(const Cone2D& cone, double t0, int n,
                                       const ConvexBody2D& K1, const ConvexBody2D& K2,
                                       const QuadratureSpec& spec = {});

/// Agreement between the needle form (sector functions integrated against the
/// normalized cos(t+t0)^{n-2} needle density) and the cone form of the same
/// product ratio; margin is the relative difference of the two ratios.
InequalityReport needle_cone_consistency(const Cone2D& cone, double t0, int n,
                                         const ConvexBody2D& K1, const ConvexBody2D& K2,
                                         const QuadratureSpec& spec = {});

struct HuntResult {
    std::optional<Witness> witness; // present iff a violation was found
    double best_ratio = 0.0;        // smallest ratio seen
    nlohmann::json best_params;
    long long evaluations = 0;
};

/// Seeded random search plus coordinate descent for a violation of the strip
/// inequality mu(C) mu(S1 cap S2 cap C) >= mu(S1 cap C) mu(S2 cap C) over
/// t0, cone interval, n in {3..8}, strip angles and half-widths. A witness
/// requires ratio < 1 - 10 * spec.abs_tol.
HuntResult hunt_strip_counterexample(std::uint64_t seed, long long budget,
                                     const QuadratureSpec& spec = {},
                                     ExecMode mode = ExecMode::parallel);

struct T0SearchResult {
    std::optional<double> t0; // present iff best margin >= -spec.abs_tol
    double best_t0 = 0.0;
    double best_margin = 0.0;
    bool found() const { return t0.has_value(); }
};

/// Phase windows inside [0, pi] keeping cos(t+t0) nonnegative on the cone.
/// Throws EmptyAdmissibleSet when none exists (always nonempty for n = 2).
std::vector<std::pair<double, double>> admissible_t0_windows(const Cone2D& cone, int n);

/// Uniform grid scan of the admissible phases for one satisfying the cone
/// inequality; a miss at finite grid is inconclusive, not a refutation.
T0SearchResult find_t0(const Cone2D& cone, int n, const ConvexBody2D& K1,
                       const ConvexBody2D& K2, int grid_size, const QuadratureSpec& spec = {},
                       ExecMode mode = ExecMode::parallel);

} // namespace spherloc
