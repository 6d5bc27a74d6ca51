#include "spherloc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace spherloc {

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u = 0.0;
    do {
        u = uniform01();
    } while (u <= 0.0);
    const double v = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double a = 2.0 * std::numbers::pi * v;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

ConvexBody2D random_symmetric_polygon(Rng& rng, int half_vertices, double r_lo, double r_hi,
                                      double spike_prob) {
    if (half_vertices < 2) throw DomainError("random_symmetric_polygon: needs >= 2 half vertices");
    if (!(0.0 < r_lo && r_lo < r_hi))
        throw DomainError("random_symmetric_polygon: requires 0 < r_lo < r_hi");

    for (int attempt = 0; attempt < 256; ++attempt) {
        const bool spiky = rng.uniform01() < spike_prob;
        std::vector<double> angles(half_vertices);
        for (int i = 0; i < half_vertices; ++i) {
            const double slot = std::numbers::pi * (i + 0.5 * rng.uniform01()) / half_vertices;
            angles[i] = slot;
        }
        std::vector<Vec2> points;
        points.reserve(2 * half_vertices);
        const int spike_at = rng.uniform_int(0, half_vertices - 1);
        for (int i = 0; i < half_vertices; ++i) {
            double r;
            if (spiky)
                r = (i == spike_at) ? rng.uniform(0.9 * r_hi, r_hi)
                                    : rng.uniform(r_lo, r_lo + 0.15 * (r_hi - r_lo));
            else
                r = rng.uniform(r_lo, r_hi);
            points.push_back(unit_dir(angles[i]) * r);
        }
        const std::size_t half = points.size();
        for (std::size_t i = 0; i < half; ++i) points.push_back(-points[i]);

        std::vector<Vec2> hull = convex_hull(std::move(points));
        if (hull.size() < 4 || hull.size() % 2 != 0) continue;
        try {
            return ConvexBody2D::polygon(std::move(hull));
        } catch (const ValidationError&) {
            continue; // hull dropped a vertex asymmetrically; resample
        }
    }
    throw DomainError("random_symmetric_polygon: no valid sample after 256 attempts");
}

} // namespace spherloc
