#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spherloc {

/// Execution mode for the data-parallel kernels. Every kernel writes
/// per-index results into a buffer and reduces in index order, so the two
/// modes produce bit-identical results; `serial` is kept as the reference
/// path for tests and benchmarks.
enum class ExecMode { serial, parallel };

template <typename Fn>
void for_each_index(std::size_t count, ExecMode mode, Fn&& fn) {
#ifdef _OPENMP
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

/// Deterministic left-to-right sum.
inline double ordered_sum(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
}

} // namespace spherloc
