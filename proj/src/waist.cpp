#include "spherloc/waist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace spherloc {

namespace {
constexpr double kHalfPi = 0.5 * std::numbers::pi;
}

ModulusSpec ModulusSpec::l2() { return {}; }

ModulusSpec ModulusSpec::lp(double p) {
    if (!(p >= 2.0)) throw DomainError("ModulusSpec::lp: requires p >= 2");
    ModulusSpec m;
    m.kind = Kind::lp;
    m.p = p;
    return m;
}

ModulusSpec ModulusSpec::from_table(std::vector<std::pair<double, double>> pairs) {
    if (pairs.empty()) throw DomainError("ModulusSpec::from_table: empty table");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [e, d] = pairs[i];
        if (!(e >= 0.0 && e <= 2.0) || !(d >= 0.0 && d <= 1.0))
            throw DomainError("ModulusSpec::from_table: entries must have eps in [0,2], delta in [0,1]");
        if (i > 0 && (!(e > pairs[i - 1].first) || !(d > pairs[i - 1].second)))
            throw DomainError("ModulusSpec::from_table: pairs must be strictly increasing");
    }
    ModulusSpec m;
    m.kind = Kind::table;
    m.table = std::move(pairs);
    return m;
}

double modulus(const ModulusSpec& space, double eps) {
    if (!(eps >= 0.0 && eps <= 2.0)) throw DomainError("modulus: eps must lie in [0, 2]");
    switch (space.kind) {
        case ModulusSpec::Kind::l2:
            return 1.0 - std::sqrt(std::max(0.0, 1.0 - 0.25 * eps * eps));
        case ModulusSpec::Kind::lp:
            return 1.0 - std::pow(1.0 - std::pow(0.5 * eps, space.p), 1.0 / space.p);
        case ModulusSpec::Kind::table: {
            const auto& t = space.table;
            // Interpolate from the implicit origin (0, 0); clamp past the end.
            double e0 = 0.0, d0 = 0.0;
            for (const auto& [e1, d1] : t) {
                if (eps <= e1) {
                    const double span = e1 - e0;
                    return span > 0.0 ? d0 + (d1 - d0) * (eps - e0) / span : d1;
                }
                e0 = e1;
                d0 = d1;
            }
            return t.back().second;
        }
    }
    throw DomainError("modulus: unknown modulus kind");
}

double psi1(int k, double eps) {
    if (k < 1) throw DomainError("psi1: requires k >= 1");
    const double arg = eps / (4.0 * std::sqrt(k + 1.0));
    if (!(arg >= 0.0 && arg <= 1.0)) throw DomainError("psi1: arcsine argument outside [0, 1]");
    return 2.0 * std::asin(arg);
}

double psi2(int k, double eps) {
    if (k < 1) throw DomainError("psi2: requires k >= 1");
    const double arg = eps / (2.0 * std::sqrt(k + 1.0));
    if (!(arg >= 0.0 && arg <= 1.0)) throw DomainError("psi2: arcsine argument outside [0, 1]");
    return 2.0 * std::asin(arg);
}

double waist_F(int k, double eps, const QuadratureSpec& spec) {
    const double lower = psi2(k, eps);
    if (lower > kHalfPi + 1e-12) throw DomainError("waist_F: psi2 exceeds pi/2");
    return sin_power_integral(k - 1, std::min(lower, kHalfPi), kHalfPi, spec);
}

double waist_G(int k, double eps, const QuadratureSpec& spec) {
    const double upper = psi1(k, eps);
    if (upper > kHalfPi + 1e-12) throw DomainError("waist_G: psi1 exceeds pi/2");
    return sin_power_integral(k - 1, 0.0, std::min(upper, kHalfPi), spec);
}

double waist_bound(const WaistParams& params, double eps, const QuadratureSpec& spec) {
    if (params.n < 2) throw DomainError("waist_bound: requires n >= 2");
    if (params.k < 1 || params.k >= params.n)
        throw DomainError("waist_bound: requires 1 <= k < n");
    if (!(eps >= 0.0)) throw DomainError("waist_bound: eps must be >= 0");
    if (eps == 0.0) return 0.0; // G -> 0 drives the denominator to infinity

    const double half = 0.5 * eps;
    const double delta = modulus(params.space, half);
    const double shrink = 1.0 - 2.0 * delta;
    if (shrink < 0.0)
        throw DomainError("waist_bound: modulus above 1/2, formula leaves its domain");
    const double f = waist_F(params.k, half, spec);
    const double g = waist_G(params.k, half, spec);
    if (!(g > 0.0)) return 0.0;

    double kk = 1.0;
    for (int i = 0; i < params.k + 1; ++i) kk *= params.k + 1.0;
    const double denom = 1.0 + pow_int(shrink, params.n - params.k) * kk * f / g;
    return 1.0 / denom;
}

double tube_volume_round(int n, int k, double eps, const QuadratureSpec& spec) {
    if (n < 2) throw DomainError("tube_volume_round: requires n >= 2");
    if (k < 1 || k > n) throw DomainError("tube_volume_round: requires 1 <= k <= n");
    if (!(eps >= 0.0 && eps <= kHalfPi + 1e-12))
        throw DomainError("tube_volume_round: eps must lie in [0, pi/2]");
    eps = std::min(eps, kHalfPi);
    const auto density = [n, k](double t) {
        return pow_int(std::cos(t), n - k) * pow_int(std::sin(t), k - 1);
    };
    const double whole = integrate_interval(density, 0.0, kHalfPi, spec);
    if (eps == kHalfPi) return 1.0;
    return integrate_interval(density, 0.0, eps, spec) / whole;
}

} // namespace spherloc
