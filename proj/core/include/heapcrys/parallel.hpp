#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace heapcrys {

// HEAPCRYS_THREADS when set to a positive integer, otherwise the hardware concurrency.
inline int thread_count() {
    if (const char* env = std::getenv("HEAPCRYS_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

// Runs body(k) for k = 0..count-1 on a small pool. Results must be written to per-index slots;
// the first exception thrown by any task is rethrown after every worker stops.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
    const auto workers = static_cast<std::size_t>(std::min<std::size_t>(thread_count(), count));
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k) body(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < count;) {
            try {
                body(k);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace heapcrys
