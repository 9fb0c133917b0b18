#pragma once
// Optional point-parallelism for grid evaluators.  Thread count comes from
// GBURGERS_THREADS (default 1).  Each worker writes disjoint output slots, so
// results are bitwise identical for any thread count.

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace gburgers {

inline unsigned env_thread_count() {
    const char* s = std::getenv("GBURGERS_THREADS");
    if (!s) return 1;
    const long n = std::strtol(s, nullptr, 10);
    if (n <= 1) return 1;
    return static_cast<unsigned>(n);
}

// body(i) for i in [0, n), split across nthreads contiguous chunks
template <class Body>
void parallel_for(std::size_t n, unsigned nthreads, Body&& body) {
    if (nthreads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(nthreads, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body, &first_error, &error_mutex] {
            try {
                for (std::size_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gburgers
