#pragma once

#include <cstdint>
#include <optional>

#include "spherloc/conemeasure.hpp"
#include "spherloc/convex2d.hpp"
#include "spherloc/parallel.hpp"

namespace spherloc {

/// Grids, refinement effort, and the random body family for the alpha
/// estimator. Radial bounds must respect the sandwich: inner > 1 and
/// outer <= sqrt(n+1) (outer is given as a fraction of that radius).
struct AlphaSearchConfig {
    int theta_grid = 36;
    int interval_grid = 14;
    double min_interval_length = 0.05;
    int vertex_half_min = 2;  // half vertex counts of the polygon family
    int vertex_half_max = 12;
    double radial_inner = 1.1;
    double radial_outer_fraction = 0.97;
    double spike_prob = 0.5;
    int sample_count = 8;
    int refine_iters = 24;
    std::uint64_t seed = 1;

    void validate(int n) const;
};

/// alpha(n, theta, I, S): the product of the two power-weighted cone
/// measures of S and its polar dual over C(I), normalized by the squared
/// angular mass of g(theta, t) = cos(t+theta)^{n-1}.
double alpha_term(int n, double theta, const Cone2D& interval, const ConvexBody2D& S,
                  const QuadratureSpec& spec = {});

struct AlphaForBodyResult {
    double value = 0.0;
    double theta = 0.0;      // achieving outer max
    double i_lo = 0.0;       // achieving inner min
    double i_hi = 0.0;
    bool min_at_length_floor = false;
};

/// alpha(n, S) = max over theta in [0, pi] of the min over admissible
/// intervals, grid-first with local refinement on both levels.
AlphaForBodyResult alpha_for_body(int n, const ConvexBody2D& S, const AlphaSearchConfig& config,
                                  const QuadratureSpec& spec = {},
                                  ExecMode mode = ExecMode::parallel);

struct AlphaEstimateResult {
    double value = 0.0;            // min over the sampled family; an upper
                                   // estimate of the true min over all S
    AlphaForBodyResult best;
    ConvexBody2D best_body = ConvexBody2D::whole_plane();
    int best_sample_index = -1;    // -1 for the disk preset
    int samples_evaluated = 0;
};

/// alpha(n) estimated over sample_count random sandwich-admissible polygons
/// plus the disk preset (always included).
AlphaEstimateResult alpha_estimate(int n, const AlphaSearchConfig& config,
                                   const QuadratureSpec& spec = {},
                                   ExecMode mode = ExecMode::parallel);

struct MahlerBoundResult {
    double bound = 0.0;        // 4 alpha pi^n / Gamma(n/2)^2
    double surface_form = 0.0; // alpha * vol_{n-1}(S^{n-1})^2, same value
};

/// Volume-product lower bound in R^n from an alpha value of dimension n-1.
/// The theorem needs n >= 4; pass allow_low_dimension to evaluate anyway.
MahlerBoundResult mahler_bound(int n, double alpha_value, bool allow_low_dimension = false);

} // namespace spherloc
