#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tov {

// Every data-parallel kernel in this library has two paths: an OpenMP one and
// a serial reference. Both fill per-slot output buffers and all reductions
// happen afterwards in canonical order, so the two paths (and any thread
// count) produce bit-identical results. Tests compare them directly.
enum class Exec { Serial, Parallel };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

// Applies f(i) for i in [0, n). f writes only to slot i of its output.
template <class F>
void map_indexed(Exec exec, std::size_t n, F&& f) {
    if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            f(static_cast<std::size_t>(i));
        }
        return;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) {
        f(i);
    }
}

} // namespace tov
