#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace storyfear {

// Runs fn(i) for i in [0, n). Each index writes only its own output slot, so
// the result is identical for any thread count. The first exception thrown
// by a worker is rethrown on the calling thread after all workers join.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (threads > n) threads = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = lo + chunk < n ? lo + chunk : n;
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn, &failure, &failure_mutex] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> guard(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace storyfear
