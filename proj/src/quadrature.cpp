#include "spherloc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace spherloc {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (nonnegative half).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Segment {
    double a, b;
    double value;
    double error;
};

Segment evaluate_gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kXgk[i];
        const double fl = f(c - dx);
        const double fr = (i == 7) ? fl : f(c + dx);
        const double sum = (i == 7) ? fl : fl + fr;
        kronrod += kWgk[i] * sum;
        if (i % 2 == 1) gauss += kWg[i / 2] * sum;
    }
    Segment s;
    s.a = a;
    s.b = b;
    s.value = kronrod * h;
    s.error = std::abs((kronrod - gauss) * h);
    return s;
}

struct WorseError {
    bool operator()(const Segment& x, const Segment& y) const { return x.error < y.error; }
};

} // namespace

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0)) throw DomainError("QuadratureSpec: abs_tol must be positive");
    if (!(rel_tol > 0.0)) throw DomainError("QuadratureSpec: rel_tol must be positive");
    if (max_subdivisions < 1) throw DomainError("QuadratureSpec: max_subdivisions must be >= 1");
}

QuadratureSpec QuadratureSpec::scaled(double factor) const {
    QuadratureSpec s = *this;
    s.abs_tol = std::max(abs_tol * factor, 1e-14);
    s.rel_tol = std::max(rel_tol * factor, 1e-13);
    return s;
}

double integrate_interval(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSpec& spec) {
    spec.validate();
    if (!(a <= b)) throw DomainError("integrate_interval: requires a <= b");
    if (a == b) return 0.0;

    std::priority_queue<Segment, std::vector<Segment>, WorseError> queue;
    Segment first = evaluate_gk15(f, a, b);
    double total = first.value;
    double total_error = first.error;
    queue.push(first);

    int used = 1;
    while (total_error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (used >= spec.max_subdivisions) {
            throw SubdivisionLimit("integrate_interval: error " + std::to_string(total_error) +
                                   " above tolerance after " + std::to_string(used) +
                                   " subdivisions");
        }
        Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = evaluate_gk15(f, worst.a, mid);
        Segment right = evaluate_gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++used;
    }
    return total;
}

double sin_power_integral(int m, double a, double b, const QuadratureSpec& spec) {
    if (m < 0) throw DomainError("sin_power_integral: exponent must be >= 0");
    constexpr double kSlack = 1e-12;
    if (a < -kSlack || b > std::numbers::pi + kSlack || a > b)
        throw DomainError("sin_power_integral: interval must lie inside [0, pi]");
    if (m == 0) return b - a;
    return integrate_interval([m](double x) { return pow_int(std::sin(x), m); }, a, b, spec);
}

namespace {

// Lower integral of r^{n-1} e^{-r^2/2} by power series, accurate for small x.
double gaussian_lower_series(int n, double x) {
    const double x2 = x * x;
    double term = pow_int(x, n);
    double sum = term / n;
    for (int j = 1; j < 400; ++j) {
        term *= -x2 / (2.0 * j);
        const double inc = term / (n + 2.0 * j);
        sum += inc;
        if (std::abs(inc) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// Upper integral of r^{n-1} e^{-r^2/2} over [x, inf); all recurrence terms
// are positive, so this direction is stable.
double gaussian_upper(int n, double x) {
    const double e = std::exp(-0.5 * x * x);
    double upper;
    int base;
    if (n % 2 == 1) {
        upper = std::sqrt(std::numbers::pi / 2.0) * std::erfc(x / std::numbers::sqrt2);
        base = 1;
    } else {
        upper = e;
        base = 2;
    }
    for (int k = base; k < n; k += 2) upper = pow_int(x, k) * e + k * upper;
    return upper;
}

} // namespace

double gaussian_full_mass(int n) {
    if (n < 1) throw DomainError("gaussian_full_mass: requires n >= 1");
    return std::pow(2.0, 0.5 * n - 1.0) * std::tgamma(0.5 * n);
}

double gaussian_radial_integral(int n, double upper, const QuadratureSpec& spec) {
    (void)spec;
    if (n < 1) throw DomainError("gaussian_radial_integral: requires n >= 1");
    if (std::isnan(upper) || upper < 0.0)
        throw DomainError("gaussian_radial_integral: upper limit must be >= 0");
    if (std::isinf(upper)) return gaussian_full_mass(n);
    if (upper <= 1.0) return gaussian_lower_series(n, upper);
    return gaussian_full_mass(n) - gaussian_upper(n, upper);
}

double power_radial_integral(double p, double upper) {
    if (!(p > -1.0)) throw DomainError("power_radial_integral: requires p > -1");
    if (std::isnan(upper) || upper < 0.0)
        throw DomainError("power_radial_integral: upper limit must be >= 0");
    if (std::isinf(upper)) throw NonIntegrable("power_radial_integral: infinite upper limit");
    return std::pow(upper, p + 1.0) / (p + 1.0);
}

double cos_power_integral(int m, double a, double b) {
    if (m < 0) throw DomainError("cos_power_integral: exponent must be >= 0");
    // I_m = [cos^{m-1}(x) sin(x)]_a^b / m + (m-1)/m I_{m-2}
    double even = b - a;                     // I_0
    double odd = std::sin(b) - std::sin(a);  // I_1
    if (m == 0) return even;
    if (m == 1) return odd;
    double value = (m % 2 == 0) ? even : odd;
    for (int k = (m % 2 == 0) ? 2 : 3; k <= m; k += 2) {
        const double boundary =
            (pow_int(std::cos(b), k - 1) * std::sin(b) - pow_int(std::cos(a), k - 1) * std::sin(a)) / k;
        value = boundary + (k - 1.0) / k * value;
    }
    return value;
}

double pow_int(double base, int m) {
    if (m < 0) throw DomainError("pow_int: exponent must be >= 0");
    double result = 1.0;
    double factor = base;
    while (m > 0) {
        if (m & 1) result *= factor;
        factor *= factor;
        m >>= 1;
    }
    return result;
}

} // namespace spherloc
