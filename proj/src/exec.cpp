#include "prony/exec.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace prony {

int thread_cap() {
    static const int cap = [] {
        const char* env = std::getenv("PRONY_THREADS");
        if (env != nullptr) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && v > 0 && v < 1024) return static_cast<int>(v);
        }
#ifdef _OPENMP
        return omp_get_max_threads();
#else
        return 1;
#endif
    }();
    return cap;
}

namespace detail {

void run_indexed(std::size_t n, void (*fn)(void*, std::size_t), void* ctx, Exec exec) {
    if (exec == Exec::Serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(ctx, i);
        return;
    }
#ifdef _OPENMP
    const int nt = thread_cap();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long i = 0; i < static_cast<long>(n); ++i)
        fn(ctx, static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) fn(ctx, i);
#endif
}

} // namespace detail
} // namespace prony
