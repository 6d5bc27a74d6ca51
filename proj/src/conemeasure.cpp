#include "spherloc/conemeasure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace spherloc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
} // namespace

RadialWeight RadialWeight::gaussian(int n) {
    if (n < 2) throw DomainError("RadialWeight::gaussian: requires n >= 2");
    RadialWeight w;
    w.kind = Kind::gaussian;
    w.ambient_dim = n;
    return w;
}

RadialWeight RadialWeight::power(double p) {
    if (!(p > -1.0)) throw DomainError("RadialWeight::power: requires exponent > -1");
    RadialWeight w;
    w.kind = Kind::power;
    w.exponent = p;
    return w;
}

double RadialWeight::cumulative(double rho) const {
    if (kind == Kind::gaussian) return gaussian_radial_integral(ambient_dim, rho);
    return power_radial_integral(exponent, rho);
}

bool cos_nonnegative_on(double phase, double t_lo, double t_hi) {
    // Reduce the start of [t_lo+phase, t_hi+phase] into [-pi, pi); the whole
    // interval must fit inside [-pi/2, pi/2] up to endpoint slack.
    double s = std::fmod(t_lo + phase, kTwoPi);
    if (s >= std::numbers::pi) s -= kTwoPi;
    if (s < -std::numbers::pi) s += kTwoPi;
    constexpr double slack = 1e-9;
    return s >= -kHalfPi - slack && s + (t_hi - t_lo) <= kHalfPi + slack;
}

ConeMeasure2D::ConeMeasure2D(Cone2D c, double phase_in, int m, RadialWeight w)
    : cone(c), phase(phase_in), angular_exponent(m), weight(w) {
    if (m < 0) throw DomainError("ConeMeasure2D: angular exponent must be >= 0");
    if (m >= 1 && !cos_nonnegative_on(phase, cone.t_lo, cone.t_hi))
        throw PhaseDomain("ConeMeasure2D: cos(t+phase) changes sign inside the cone");
}

double ConeMeasure2D::angular_density(double t) const {
    if (angular_exponent == 0) return 1.0;
    const double c = std::cos(t + phase);
    // Endpoint grazing can put c at -1e-17; the admissibility check has
    // already vouched for the interval.
    return pow_int(std::max(c, 0.0), angular_exponent);
}

double cone_body_measure(const ConeMeasure2D& cm, const ConvexBody2D& body,
                         const QuadratureSpec& spec) {
    if (cm.weight.kind == RadialWeight::Kind::power) {
        const UnboundedDirections dirs = unbounded_directions(body);
        if (dirs.meets_arc(cm.cone.t_lo, cm.cone.t_hi))
            throw NonIntegrable("cone_body_measure: power weight with body unbounded on the cone");
    }
    const auto integrand = [&cm, &body](double t) {
        return cm.angular_density(t) * cm.weight.cumulative(body.radial(t));
    };
    return integrate_interval(integrand, cm.cone.t_lo, cm.cone.t_hi, spec);
}

double brute_force_cone_measure(const ConeMeasure2D& cm, const ConvexBody2D& body, int grid_n,
                                ExecMode mode) {
    if (grid_n < 1) throw DomainError("brute_force_cone_measure: grid_n must be >= 1");

    // Radial truncation: bounded bodies stop at their max radius, Gaussian
    // weights once the density drops below 1e-16 past its mode.
    double r_max = body.max_radial();
    if (std::isinf(r_max)) {
        if (cm.weight.kind != RadialWeight::Kind::gaussian)
            throw NonIntegrable("brute_force_cone_measure: unbounded body needs a Gaussian weight");
        const int n = cm.weight.ambient_dim;
        double r = std::sqrt(static_cast<double>(n - 1)) + 1.0;
        while (pow_int(r, n - 1) * std::exp(-0.5 * r * r) > 1e-16) r += 0.5;
        r_max = r;
    }

    const double t_lo = cm.cone.t_lo;
    const double dt = cm.cone.length() / grid_n;
    const double dr = r_max / grid_n;

    const auto radial_weight = [&cm](double r) {
        if (cm.weight.kind == RadialWeight::Kind::gaussian)
            return pow_int(r, cm.weight.ambient_dim - 1) * std::exp(-0.5 * r * r);
        return std::pow(r, cm.weight.exponent);
    };

    std::vector<double> column(grid_n, 0.0);
    for_each_index(
        static_cast<std::size_t>(grid_n), mode,
        [&](std::size_t i) {
            const double t = t_lo + (static_cast<double>(i) + 0.5) * dt;
            const double angular = cm.angular_density(t);
            const double rho = std::min(body.radial(t), r_max);
            double sum = 0.0;
            const int full_cells = static_cast<int>(rho / dr);
            for (int j = 0; j < std::min(full_cells, grid_n); ++j)
                sum += radial_weight((j + 0.5) * dr) * dr;
            if (full_cells < grid_n) {
                const double r_lo = full_cells * dr;
                const double part = rho - r_lo;
                if (part > 0.0) sum += radial_weight(r_lo + 0.5 * part) * part;
            }
            column[i] = angular * sum * dt;
        });
    return ordered_sum(column);
}

} // namespace spherloc
