#include "spherloc/needle.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace spherloc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_two_pi(double t) {
    double r = std::fmod(t, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on the
// Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

} // namespace

NeedleDensity::NeedleDensity(int exponent, double phase, double support_lo, double support_hi,
                             double scale)
    : exponent_(exponent), phase_(wrap_two_pi(phase)), a_(support_lo), b_(support_hi),
      scale_(scale) {
    if (exponent_ < 0) throw DomainError("NeedleDensity: exponent must be >= 0");
    if (!(scale_ > 0.0)) throw DomainError("NeedleDensity: scale must be positive");
    const double len = b_ - a_;
    if (!(len > 0.0) || len > kPi + 1e-12)
        throw DomainError("NeedleDensity: support length must lie in (0, pi]");
    if (exponent_ >= 1) {
        // sin(t+phase) >= 0 on [a, b]: the shifted interval must sit in
        // [0, pi] modulo 2pi, up to endpoint slack.
        const double s = wrap_two_pi(a_ + phase_);
        constexpr double slack = 1e-9;
        const bool ok = (s <= kPi + slack && s + len <= kPi + slack) ||
                        (s >= kTwoPi - slack && s - kTwoPi + len <= kPi + slack);
        if (!ok)
            throw DomainError("NeedleDensity: sin(t+phase) is negative somewhere on the support");
    }
}

NeedleDensity NeedleDensity::from_dimensions(int ambient_dim, int needle_dim, double phase,
                                             double support_lo, double support_hi) {
    if (ambient_dim < 2) throw DomainError("NeedleDensity: ambient dimension must be >= 2");
    if (needle_dim < 1 || needle_dim > ambient_dim)
        throw DomainError("NeedleDensity: needle dimension must lie in [1, ambient_dim]");
    return NeedleDensity(ambient_dim - needle_dim, phase, support_lo, support_hi);
}

NeedleDensity NeedleDensity::cosine_form(int exponent, double t0, double support_lo,
                                         double support_hi) {
    return NeedleDensity(exponent, t0 + kPi / 2.0, support_lo, support_hi);
}

double NeedleDensity::density(double t) const {
    if (exponent_ == 0) return scale_;
    return scale_ * pow_int(std::max(std::sin(t + phase_), 0.0), exponent_);
}

NeedleDensity needle_normalize(const NeedleDensity& d, const QuadratureSpec& spec) {
    double z;
    if (d.exponent_ == 0) {
        z = d.b_ - d.a_;
    } else {
        double s = wrap_two_pi(d.a_ + d.phase_);
        if (s >= kTwoPi - 1e-9) s -= kTwoPi; // endpoint grazing from below
        const double lo = std::clamp(s, 0.0, kPi);
        const double hi = std::clamp(s + (d.b_ - d.a_), 0.0, kPi);
        z = sin_power_integral(d.exponent_, lo, hi, spec);
    }
    if (!(z > 1e-300)) throw DegenerateNeedle("needle_normalize: density integrates to zero");
    NeedleDensity out = d;
    out.scale_ = 1.0 / z;
    out.normalized_ = true;
    return out;
}

double needle_integrate(const NeedleDensity& d, const std::function<double(double)>& f,
                        const QuadratureSpec& spec) {
    if (!d.normalized())
        throw DomainError("needle_integrate: density must be normalized first");
    return integrate_interval([&](double t) { return f(t) * d.density(t); }, d.support_lo(),
                              d.support_hi(), spec);
}

double sphere_integrate(int n, const SphereFn& f, const QuadratureSpec& spec) {
    if (n != 2 && n != 3) throw DomainError("sphere_integrate: only n in {2, 3}");
    const QuadratureSpec inner = spec.scaled(0.02);
    if (n == 2) {
        // (1/4pi) int_0^pi sin(theta) int_0^2pi f dphi dtheta
        const auto outer = [&](double theta) {
            const double st = std::sin(theta), ct = std::cos(theta);
            const double phi_integral = integrate_interval(
                [&](double phi) {
                    const std::array<double, 3> p{st * std::cos(phi), st * std::sin(phi), ct};
                    return f(std::span<const double>(p));
                },
                0.0, kTwoPi, inner);
            return st * phi_integral;
        };
        return integrate_interval(outer, 0.0, kPi, spec) / (4.0 * kPi);
    }
    // n == 3: (1/2pi^2) int sin^2(psi) sin(theta) f dphi dtheta dpsi
    const QuadratureSpec innermost = inner.scaled(0.02);
    const auto outer = [&](double psi) {
        const double sp = std::sin(psi), cp = std::cos(psi);
        const auto middle = [&](double theta) {
            const double st = std::sin(theta), ct = std::cos(theta);
            const double phi_integral = integrate_interval(
                [&](double phi) {
                    const std::array<double, 4> p{sp * st * std::cos(phi), sp * st * std::sin(phi),
                                                  sp * ct, cp};
                    return f(std::span<const double>(p));
                },
                0.0, kTwoPi, innermost);
            return st * phi_integral;
        };
        return sp * sp * integrate_interval(middle, 0.0, kPi, inner);
    };
    return integrate_interval(outer, 0.0, kPi, spec) / (2.0 * kPi * kPi);
}

InequalityReport meridian_fubini_check(int n, const SphereFn& f, int directions,
                                       const QuadratureSpec& spec, ExecMode mode) {
    if (n != 2 && n != 3) throw DomainError("meridian_fubini_check: only n in {2, 3}");
    if (directions < 1) throw DomainError("meridian_fubini_check: directions must be >= 1");

    const double sphere_value = sphere_integrate(n, f, spec);

    // Meridian through equatorial direction u: gamma(t) = sin(t) u + cos(t) N,
    // carrying the normalized needle density proportional to sin(t)^{n-1}.
    const NeedleDensity meridian =
        needle_normalize(NeedleDensity(n - 1, 0.0, 0.0, kPi), spec);

    const auto meridian_integral = [&](double ux, double uy, double uz) {
        return needle_integrate(
            meridian,
            [&](double t) {
                const double st = std::sin(t), ct = std::cos(t);
                if (n == 2) {
                    const std::array<double, 3> p{st * ux, st * uy, ct};
                    return f(std::span<const double>(p));
                }
                const std::array<double, 4> p{st * ux, st * uy, st * uz, ct};
                return f(std::span<const double>(p));
            },
            spec);
    };

    double average = 0.0;
    if (n == 2) {
        std::vector<double> values(directions);
        for_each_index(static_cast<std::size_t>(directions), mode, [&](std::size_t j) {
            const double phi = kTwoPi * static_cast<double>(j) / directions;
            values[j] = meridian_integral(std::cos(phi), std::sin(phi), 0.0);
        });
        average = ordered_sum(values) / directions;
    } else {
        // Equator is a 2-sphere: Gauss-Legendre in the polar cosine, uniform
        // grid in azimuth.
        std::vector<double> nodes, weights;
        gauss_legendre(directions, nodes, weights);
        const int n_phi = 2 * directions;
        std::vector<double> values(static_cast<std::size_t>(directions) * n_phi);
        for_each_index(values.size(), mode, [&](std::size_t idx) {
            const std::size_t i = idx / n_phi;
            const std::size_t j = idx % n_phi;
            const double c = nodes[i];
            const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
            const double phi = kTwoPi * static_cast<double>(j) / n_phi;
            values[idx] = weights[i] / (2.0 * n_phi) *
                          meridian_integral(s * std::cos(phi), s * std::sin(phi), c);
        });
        average = ordered_sum(values);
    }

    nlohmann::json params{{"n", n}, {"directions", directions}};
    return InequalityReport::agreement(sphere_value, average, 1e-6, std::move(params));
}

} // namespace spherloc
