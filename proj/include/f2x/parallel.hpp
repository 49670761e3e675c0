// parallel.hpp - static partitioning of an index range over worker threads.

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace f2x {

// Calls body(begin, end) on disjoint contiguous chunks covering [0, n).
// Chunk boundaries depend only on n and jobs, so writes indexed by position
// give the same result for every thread count. The first exception thrown by
// any chunk is rethrown after all workers join.
template <class Body>
void parallel_chunks(std::size_t n, unsigned jobs, Body body) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || n < 2) {
        body(std::size_t{0}, n);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(jobs, n);
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = n * w / workers;
        const std::size_t end = n * (w + 1) / workers;
        threads.emplace_back([&, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace f2x
