#pragma once

#include <utility>
#include <vector>

#include "spherloc/quadrature.hpp"

namespace spherloc {

/// Source of the modulus of convexity delta(eps) of the normed space.
/// L2 and Lp use closed forms (the Lp form is the standard lower estimate,
/// which only weakens the waist bound); Table interpolates linearly.
struct ModulusSpec {
    enum class Kind { l2, lp, table };

    Kind kind = Kind::l2;
    double p = 2.0;                                 // for lp, p >= 2
    std::vector<std::pair<double, double>> table;   // (eps, delta), strictly increasing

    static ModulusSpec l2();
    static ModulusSpec lp(double p);
    static ModulusSpec from_table(std::vector<std::pair<double, double>> pairs);
};

/// Modulus of convexity at eps in [0, 2].
double modulus(const ModulusSpec& space, double eps);

/// psi1 = 2 asin(eps / (4 sqrt(k+1))), psi2 = 2 asin(eps / (2 sqrt(k+1))).
double psi1(int k, double eps);
double psi2(int k, double eps);

/// F = integral of sin^{k-1} over [psi2(eps), pi/2];
/// G = integral of sin^{k-1} over [0, psi1(eps)].
double waist_F(int k, double eps, const QuadratureSpec& spec = {});
double waist_G(int k, double eps, const QuadratureSpec& spec = {});

/// Space dimension n+1, fiber dimension k (1 <= k < n), and the modulus.
struct WaistParams {
    int n;
    int k;
    ModulusSpec space;
};

/// Waist lower bound
///   w(eps) = 1 / (1 + (1 - 2 delta(eps/2))^{n-k} (k+1)^{k+1} F(k,eps/2)/G(k,eps/2)),
/// with w(0) = 0 by continuity.
double waist_bound(const WaistParams& params, double eps, const QuadratureSpec& spec = {});

/// Normalized volume of the eps-neighborhood of an equatorial S^{n-k} in S^n:
///   int_0^eps cos^{n-k} sin^{k-1} / int_0^{pi/2} cos^{n-k} sin^{k-1},
/// for eps in [0, pi/2] and 1 <= k <= n.
double tube_volume_round(int n, int k, double eps, const QuadratureSpec& spec = {});

} // namespace spherloc
