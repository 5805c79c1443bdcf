#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace fibtri {

// Runs body(i) for i in [begin, end) on up to `workers` threads. Each index
// is dispatched exactly once; callers keep results in index-addressed
// storage so the final fold is independent of completion order.
inline void parallel_for(std::size_t begin, std::size_t end, int workers,
                         const std::function<void(std::size_t)>& body) {
    if (end <= begin) return;
    std::size_t count = end - begin;
    std::size_t nthreads = workers > 1 ? std::min<std::size_t>(workers, count) : 1;
    if (nthreads <= 1) {
        for (std::size_t i = begin; i < end; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (std::size_t i = begin + t; i < end; i += nthreads) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

inline int default_workers() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

} // namespace fibtri
