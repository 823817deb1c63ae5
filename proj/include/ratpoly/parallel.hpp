#pragma once

#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ratpoly {

inline int default_workers() {
    if (const char* env = std::getenv("RATPOLY_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Runs fn(index, worker) over [0, n). workers == 1 is a plain serial loop,
// kept as the reference path; the parallel path must produce the same result
// set (callers accumulate into per-worker buffers and merge order-invariantly).
template <typename Fn>
void parallel_for(size_t n, int workers, Fn&& fn) {
    if (workers <= 1) {
        for (size_t i = 0; i < n; i++) fn(i, 0);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel num_threads(workers)
    {
        int w = omp_get_thread_num();
#pragma omp for schedule(dynamic, 16)
        for (long long i = 0; i < (long long)n; i++) fn((size_t)i, w);
    }
#else
    for (size_t i = 0; i < n; i++) fn(i, 0);
#endif
}

}  // namespace ratpoly
