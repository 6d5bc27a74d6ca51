#pragma once

#include "spherloc/convex2d.hpp"
#include "spherloc/parallel.hpp"
#include "spherloc/quadrature.hpp"

namespace spherloc {

/// Radial factor of a planar cone measure: either the Gaussian profile
/// r^{n-1} e^{-r^2/2} or a pure power r^p.
struct RadialWeight {
    enum class Kind { gaussian, power };

    Kind kind = Kind::gaussian;
    int ambient_dim = 2; // gaussian: weight r^{ambient_dim-1} e^{-r^2/2}
    double exponent = 0; // power: weight r^exponent, exponent > -1

    static RadialWeight gaussian(int n);
    static RadialWeight power(double p);

    /// Integral of the weight over [0, rho].
    double cumulative(double rho) const;
};

/// Weighted planar measure on a cone: density cos(t+phase)^m * weight(r)
/// in polar coordinates, restricted to t in the cone's interval.
struct ConeMeasure2D {
    Cone2D cone;
    double phase = 0.0;        // in [0, pi]
    int angular_exponent = 0;  // m >= 0
    RadialWeight weight;

    ConeMeasure2D(Cone2D c, double phase, int angular_exponent, RadialWeight w);

    double angular_density(double t) const;
};

/// True iff cos(t+phase) >= 0 (to 1e-9) on the whole interval.
bool cos_nonnegative_on(double phase, double t_lo, double t_hi);

/// Measure of K under cm: the angular integral of
/// cos(t+phase)^m * W(rho_K(t)), where W is the cumulative radial weight.
/// Power weight requires K to be bounded along the cone (NonIntegrable).
double cone_body_measure(const ConeMeasure2D& cm, const ConvexBody2D& body,
                         const QuadratureSpec& spec = {});

/// Independent oracle: midpoint Riemann sum over an (r, t) grid of the raw
/// density restricted to {r <= rho_K(t)}, with the radial boundary cell
/// handled fractionally. grid_n cells per axis.
double brute_force_cone_measure(const ConeMeasure2D& cm, const ConvexBody2D& body, int grid_n,
                                ExecMode mode = ExecMode::parallel);

} // namespace spherloc
