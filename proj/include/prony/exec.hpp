#ifndef PRONY_EXEC_HPP
#define PRONY_EXEC_HPP

#include <cstddef>

namespace prony {

// Execution policy for the sampling kernels. Serial is the reference
// implementation; Parallel runs the same per-index body under OpenMP.
// Both write results into preallocated index slots, so the output is
// identical regardless of policy or thread count.
enum class Exec { Serial, Parallel };

// Thread cap for parallel kernels. Reads PRONY_THREADS once per process;
// unset or invalid means the OpenMP default.
int thread_cap();

namespace detail {
void run_indexed(std::size_t n, void (*fn)(void*, std::size_t), void* ctx, Exec exec);
}

// Invokes body(i) for i in [0, n). With Exec::Parallel the iterations are
// distributed over OpenMP threads; the body must not throw.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
    detail::run_indexed(
        n,
        [](void* ctx, std::size_t i) { (*static_cast<Body*>(ctx))(i); },
        &body, exec);
}

} // namespace prony

#endif
