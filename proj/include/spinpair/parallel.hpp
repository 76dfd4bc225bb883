// Minimal deterministic parallel-for used by the sweep and phase-diagram
// drivers.  Each index writes to its own preallocated slot, so results do not
// depend on scheduling.  Worker count comes from SPINPAIR_THREADS when set.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace spinpair {

inline unsigned worker_count() {
    if (const char* env = std::getenv("SPINPAIR_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
    const std::size_t workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }

    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            const std::size_t begin = t * n / workers;
            const std::size_t end = (t + 1) * n / workers;
            try {
                for (std::size_t i = begin; i < end; ++i) body(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace spinpair
