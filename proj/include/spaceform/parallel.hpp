#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spaceform {

enum class Exec { Serial, Parallel };

// Thread cap: SPACEFORM_THREADS when set (clamped to >= 1), otherwise the
// machine parallelism.
int resolve_thread_cap();

// Applies f(i) for i in [0, n) and collects results by index. The parallel
// path is an OpenMP static-schedule loop; results are merged by index, so
// the output is identical to the serial reference for pure f. Exceptions
// are captured and the one thrown at the smallest index is rethrown.
template <typename F>
auto map_indexed(std::size_t n, F&& f, Exec exec = Exec::Parallel)
    -> std::vector<decltype(f(std::size_t{0}))> {
    using R = decltype(f(std::size_t{0}));
    std::vector<R> out(n);
    if (n == 0) return out;

#ifdef _OPENMP
    const int cap = resolve_thread_cap();
    if (exec == Exec::Parallel && cap > 1 && n > 1) {
        std::exception_ptr error = nullptr;
        std::size_t error_index = n;
#pragma omp parallel for schedule(static) num_threads(cap)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(spaceform_map_error)
                if (static_cast<std::size_t>(i) < error_index) {
                    error_index = static_cast<std::size_t>(i);
                    error = std::current_exception();
                }
            }
        }
        if (error) std::rethrow_exception(error);
        return out;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
}

}  // namespace spaceform
