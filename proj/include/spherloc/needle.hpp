#pragma once

#include <functional>
#include <span>

#include "spherloc/parallel.hpp"
#include "spherloc/quadrature.hpp"
#include "spherloc/report.hpp"

namespace spherloc {

/// A 1-needle's angular density C * sin(t+phase)^m on an arc [a, b] of
/// length at most pi, nonnegative on its support. The cosine-phase form
/// cos(t+t0)^m is the same density with phase = t0 + pi/2.
class NeedleDensity {
public:
    NeedleDensity(int exponent, double phase, double support_lo, double support_hi,
                  double scale = 1.0);

    /// Exponent m = ambient_dim - needle_dim. The uniform density m = 0
    /// corresponds to needle_dim == ambient_dim.
    static NeedleDensity from_dimensions(int ambient_dim, int needle_dim, double phase,
                                         double support_lo, double support_hi);

    static NeedleDensity cosine_form(int exponent, double t0, double support_lo,
                                     double support_hi);

    double density(double t) const;

    int exponent() const { return exponent_; }
    double phase() const { return phase_; }
    double support_lo() const { return a_; }
    double support_hi() const { return b_; }
    double scale() const { return scale_; }
    bool normalized() const { return normalized_; }

    friend NeedleDensity needle_normalize(const NeedleDensity&, const QuadratureSpec&);

private:
    int exponent_;
    double phase_;
    double a_, b_;
    double scale_;
    bool normalized_ = false;
};

/// Rescale so the density integrates to 1 on its support.
NeedleDensity needle_normalize(const NeedleDensity& d, const QuadratureSpec& spec = {});

/// Integral of f against a normalized needle density.
double needle_integrate(const NeedleDensity& d, const std::function<double(double)>& f,
                        const QuadratureSpec& spec = {});

/// A scalar function of a point on S^n, passed its n+1 Cartesian coordinates.
using SphereFn = std::function<double(std::span<const double>)>;

/// Integral of f over S^n (n = 2 or 3) against the normalized Riemannian
/// volume, by iterated adaptive quadrature in angular coordinates.
double sphere_integrate(int n, const SphereFn& f, const QuadratureSpec& spec = {});

/// Consistency harness for the meridian needle partition: compares
/// sphere_integrate(f) with the average over equatorial directions of the
/// needle integral along pole-to-pole meridians (density sin(t)^{n-1}).
/// The report is of agreement kind; margin = sphere - meridian average.
InequalityReport meridian_fubini_check(int n, const SphereFn& f, int directions,
                                       const QuadratureSpec& spec = {},
                                       ExecMode mode = ExecMode::parallel);

} // namespace spherloc
