#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hilbert::par {

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

// Runs fn(i) for i in [0, n). Every fn(i) must write only to slot i of its
// output, so the parallel path and the serial reference path produce
// bit-identical results for any thread count. The first exception thrown by
// any iteration is rethrown on the calling thread.
template <class Fn>
void for_index(std::size_t n, bool parallel, Fn&& fn) {
    if (parallel) {
#ifdef _OPENMP
        std::exception_ptr err;
        std::mutex err_mtx;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                fn(static_cast<std::size_t>(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mtx);
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace hilbert::par
