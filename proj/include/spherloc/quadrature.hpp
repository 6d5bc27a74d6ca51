#pragma once

#include <functional>

#include "spherloc/errors.hpp"

namespace spherloc {

/// Tolerances and budget for the adaptive quadrature engine.
/// A result is accepted once the estimated error drops below
/// max(abs_tol, rel_tol * |result|).
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 512;

    void validate() const;

    /// Same budget, tolerances scaled by `factor` (floored at 1e-14 abs).
    QuadratureSpec scaled(double factor) const;
};

/// Adaptive Gauss-Kronrod 7/15 integration of f over [a, b].
/// Throws SubdivisionLimit if the tolerance is unreachable within
/// spec.max_subdivisions bisections.
double integrate_interval(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSpec& spec = {});

/// Integral of sin(x)^m over [a, b], which must lie inside [0, pi].
double sin_power_integral(int m, double a, double b, const QuadratureSpec& spec = {});

/// Integral of r^{n-1} e^{-r^2/2} over [0, upper]. An infinite upper limit
/// is resolved exactly as 2^{n/2-1} Gamma(n/2). Finite limits use stable
/// closed forms (series for small upper, complemented recurrence otherwise),
/// so the result is exact to rounding regardless of `spec`.
double gaussian_radial_integral(int n, double upper, const QuadratureSpec& spec = {});

/// Total Gaussian radial mass of a ray: gaussian_radial_integral(n, inf).
double gaussian_full_mass(int n);

/// Integral of r^p over [0, upper] = upper^{p+1}/(p+1), for p > -1.
/// Throws NonIntegrable for an infinite upper limit.
double power_radial_integral(double p, double upper);

/// Integral of cos(x)^m over [a, b] by antiderivative recurrence.
double cos_power_integral(int m, double a, double b);

/// base^m by exponent squaring, m >= 0.
double pow_int(double base, int m);

} // namespace spherloc
