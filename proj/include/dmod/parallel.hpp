#pragma once

// Fixed-size worker fan-out for independent jobs. Results are stored by job
// index so merged output never depends on scheduling.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace dmod {

/// Worker count: DMOD_THREADS when set to a positive integer, else the hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("DMOD_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(k) for k in [0, count) and returns the results in index order.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, Fn fn, unsigned workers = thread_count()) {
    std::vector<Result> out(count);
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k) out[k] = fn(k);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t k = next++; k < count; k = next++) {
            try {
                out[k] = fn(k);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace dmod
