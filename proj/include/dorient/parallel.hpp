#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dorient {

/// Worker count to use when the caller passes 0.
inline unsigned default_workers()
{
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs f(i) for i in [0, tasks) on up to `workers` threads. Tasks are
/// claimed in index order; the first exception thrown is rethrown here.
template <typename F>
void parallel_for(std::size_t tasks, unsigned workers, F&& f)
{
    if (workers == 0) workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, tasks));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = tasks;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace dorient
