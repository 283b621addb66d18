#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cgof {

/// Worker count from GOF_THREADS (0 or unset = hardware concurrency).
[[nodiscard]] std::size_t configured_workers();

/// Resolves a requested count: 0 means configured_workers().
[[nodiscard]] std::size_t resolve_workers(std::size_t requested);

/// Calls f(i) for every i in [0, count) over contiguous blocks on `workers`
/// threads. f must only write state owned by index i. The first exception
/// thrown by any worker is rethrown.
template <class F>
void parallel_for(std::size_t count, std::size_t workers, F&& f) {
    workers = std::max<std::size_t>(1, std::min(workers, count));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t block = (count + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * block;
            const std::size_t end = std::min(count, begin + block);
            if (begin >= end) break;
            pool.emplace_back([&, begin, end] {
                try {
                    for (std::size_t i = begin; i < end; ++i) f(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace cgof
