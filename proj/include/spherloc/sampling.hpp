#pragma once

#include <cstdint>
#include <random>

#include "spherloc/convex2d.hpp"

namespace spherloc {

/// Seeded RNG with portable uniform draws (bit patterns depend only on
/// mt19937_64, not on library distribution implementations).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    int uniform_int(int lo, int hi) { // inclusive
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::uint64_t bits() { return eng_(); }

    /// Standard normal by Box-Muller on the portable uniforms.
    double normal();

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Origin-symmetric random polygon: radial perturbation of a circle over a
/// half-turn of jittered angles, symmetrized and projected to convexity by
/// the hull. spike_prob mixes in profiles with most radii near r_lo and one
/// or two near r_hi, which after the hull become cigar-like bodies.
ConvexBody2D random_symmetric_polygon(Rng& rng, int half_vertices, double r_lo, double r_hi,
                                      double spike_prob = 0.0);

} // namespace spherloc
