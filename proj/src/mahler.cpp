#include "spherloc/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "spherloc/sampling.hpp"

namespace spherloc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

double alpha_term_impl(int n, double theta, double lo, double hi, const ConvexBody2D& S,
                       const ConvexBody2D& dual, const QuadratureSpec& spec) {
    const ConeMeasure2D cm(Cone2D(lo, hi), theta, n - 1, RadialWeight::power(n));
    const double denom = cos_power_integral(n - 1, lo + theta, hi + theta);
    if (denom < 1e-14)
        throw DegenerateInterval("alpha_term: angular mass of the interval below 1e-14");
    const double num1 = cone_body_measure(cm, S, spec);
    const double num2 = cone_body_measure(cm, dual, spec);
    return num1 * num2 / (denom * denom);
}

struct InnerMin {
    double value = std::numeric_limits<double>::infinity();
    double s_frac = 0.0;
    double l_frac = 0.0;
};

// Interval parametrization inside the admissible window of theta: the
// length runs over [min_len, pi] and the start over what remains.
void interval_of(double theta, double min_len, double s_frac, double l_frac, double& lo,
                 double& hi) {
    const double w_lo = -theta - kHalfPi;
    const double length = min_len + l_frac * (kPi - min_len);
    lo = w_lo + s_frac * (kPi - length);
    hi = lo + length;
}

InnerMin inner_minimum(int n, double theta, const ConvexBody2D& S, const ConvexBody2D& dual,
                       const AlphaSearchConfig& config, const QuadratureSpec& spec) {
    InnerMin best;
    const int g = config.interval_grid;
    const auto evaluate = [&](double s_frac, double l_frac) {
        double lo, hi;
        interval_of(theta, config.min_interval_length, s_frac, l_frac, lo, hi);
        return alpha_term_impl(n, theta, lo, hi, S, dual, spec);
    };
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
            const double s_frac = static_cast<double>(i) / (g - 1);
            const double l_frac = static_cast<double>(j) / (g - 1);
            const double v = evaluate(s_frac, l_frac);
            if (v < best.value) best = {v, s_frac, l_frac};
        }
    }
    double step = 1.0 / (g - 1);
    for (int it = 0; it < config.refine_iters; ++it) {
        bool improved = false;
        for (const auto& [ds, dl] : {std::pair{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}}) {
            const double s = std::clamp(best.s_frac + ds, 0.0, 1.0);
            const double l = std::clamp(best.l_frac + dl, 0.0, 1.0);
            const double v = evaluate(s, l);
            if (v < best.value) {
                best = {v, s, l};
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

} // namespace

void AlphaSearchConfig::validate(int n) const {
    if (n < 2) throw DomainError("AlphaSearchConfig: requires n >= 2");
    if (theta_grid < 2 || interval_grid < 2)
        throw DomainError("AlphaSearchConfig: grids must have at least 2 points");
    if (!(min_interval_length > 0.0 && min_interval_length < kPi))
        throw DomainError("AlphaSearchConfig: min_interval_length must lie in (0, pi)");
    if (!(radial_inner > 1.0))
        throw DomainError("AlphaSearchConfig: inner radial bound must exceed 1");
    if (!(radial_outer_fraction > 0.0 && radial_outer_fraction <= 1.0))
        throw DomainError("AlphaSearchConfig: radial_outer_fraction must lie in (0, 1]");
    if (!(radial_inner < radial_outer_fraction * std::sqrt(n + 1.0)))
        throw DomainError("AlphaSearchConfig: radial bounds violate the sandwich");
    if (sample_count < 0) throw DomainError("AlphaSearchConfig: sample_count must be >= 0");
    if (refine_iters < 0) throw DomainError("AlphaSearchConfig: refine_iters must be >= 0");
    if (vertex_half_min < 2 || vertex_half_max < vertex_half_min)
        throw DomainError("AlphaSearchConfig: bad vertex count range");
}

double alpha_term(int n, double theta, const Cone2D& interval, const ConvexBody2D& S,
                  const QuadratureSpec& spec) {
    if (n < 2) throw DomainError("alpha_term: requires n >= 2");
    if (!ball_sandwich_check(S, 1.0, std::sqrt(n + 1.0)))
        throw SandwichViolation("alpha_term: body fails the unit-ball / sqrt(n+1) sandwich");
    return alpha_term_impl(n, theta, interval.t_lo, interval.t_hi, S, polar_dual(S), spec);
}

AlphaForBodyResult alpha_for_body(int n, const ConvexBody2D& S, const AlphaSearchConfig& config,
                                  const QuadratureSpec& spec, ExecMode mode) {
    config.validate(n);
    if (!ball_sandwich_check(S, 1.0, std::sqrt(n + 1.0)))
        throw SandwichViolation("alpha_for_body: body fails the unit-ball / sqrt(n+1) sandwich");
    const ConvexBody2D dual = polar_dual(S);

    std::vector<double> thetas(config.theta_grid);
    for (int i = 0; i < config.theta_grid; ++i)
        thetas[i] = kPi * static_cast<double>(i) / (config.theta_grid - 1);

    std::vector<InnerMin> inner(thetas.size());
    for_each_index(thetas.size(), mode, [&](std::size_t i) {
        inner[i] = inner_minimum(n, thetas[i], S, dual, config, spec);
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < inner.size(); ++i)
        if (inner[i].value > inner[best].value) best = i;

    // Local golden-section refinement of theta around the grid argmax.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    const double dt = kPi / (config.theta_grid - 1);
    double lo = std::max(0.0, thetas[best] - dt);
    double hi = std::min(kPi, thetas[best] + dt);
    double best_theta = thetas[best];
    InnerMin best_inner = inner[best];
    for (int it = 0; it < std::min(config.refine_iters, 12); ++it) {
        const double m1 = hi - gr * (hi - lo);
        const double m2 = lo + gr * (hi - lo);
        const InnerMin v1 = inner_minimum(n, m1, S, dual, config, spec);
        const InnerMin v2 = inner_minimum(n, m2, S, dual, config, spec);
        if (v1.value > best_inner.value) {
            best_inner = v1;
            best_theta = m1;
        }
        if (v2.value > best_inner.value) {
            best_inner = v2;
            best_theta = m2;
        }
        if (v1.value < v2.value)
            lo = m1;
        else
            hi = m2;
    }

    AlphaForBodyResult result;
    result.value = best_inner.value;
    result.theta = best_theta;
    interval_of(best_theta, config.min_interval_length, best_inner.s_frac, best_inner.l_frac,
                result.i_lo, result.i_hi);
    result.min_at_length_floor = best_inner.l_frac <= 0.5 / (config.interval_grid - 1);
    return result;
}

AlphaEstimateResult alpha_estimate(int n, const AlphaSearchConfig& config,
                                   const QuadratureSpec& spec, ExecMode mode) {
    config.validate(n);
    const double outer = std::sqrt(n + 1.0);

    std::vector<ConvexBody2D> bodies;
    bodies.push_back(ConvexBody2D::disk(0.5 * (1.0 + outer)));

    Rng rng(config.seed);
    for (int s = 0; s < config.sample_count; ++s) {
        for (int attempt = 0; attempt < 256; ++attempt) {
            const int half = rng.uniform_int(config.vertex_half_min, config.vertex_half_max);
            ConvexBody2D body = random_symmetric_polygon(
                rng, half, config.radial_inner, config.radial_outer_fraction * outer,
                config.spike_prob);
            if (ball_sandwich_check(body, 1.0, outer)) {
                bodies.push_back(std::move(body));
                break;
            }
        }
    }

    std::vector<AlphaForBodyResult> results(bodies.size());
    for_each_index(bodies.size(), mode, [&](std::size_t i) {
        results[i] = alpha_for_body(n, bodies[i], config, spec, ExecMode::serial);
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i)
        if (results[i].value < results[best].value) best = i;

    AlphaEstimateResult out;
    out.value = results[best].value;
    out.best = results[best];
    out.best_body = bodies[best];
    out.best_sample_index = static_cast<int>(best) - 1;
    out.samples_evaluated = static_cast<int>(bodies.size()) - 1;
    return out;
}

MahlerBoundResult mahler_bound(int n, double alpha_value, bool allow_low_dimension) {
    if (n < 4 && !allow_low_dimension)
        throw DomainError("mahler_bound: stated for n >= 4 (pass the override to evaluate anyway)");
    if (n < 2) throw DomainError("mahler_bound: requires n >= 2");
    if (!(alpha_value > 0.0 && alpha_value < 1.0))
        throw DomainError("mahler_bound: alpha must lie in (0, 1)");
    const double g = std::tgamma(0.5 * n);
    MahlerBoundResult r;
    r.bound = 4.0 * alpha_value * std::pow(kPi, n) / (g * g);
    const double sphere_area = 2.0 * std::pow(kPi, 0.5 * n) / g; // vol_{n-1}(S^{n-1})
    r.surface_form = alpha_value * sphere_area * sphere_area;
    return r;
}

} // namespace spherloc
