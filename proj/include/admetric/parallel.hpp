// Minimal deterministic parallel-for. Workers write results only into
// caller-owned slots indexed by the loop variable, so the thread count never
// changes any output. ADMETRIC_THREADS overrides the worker count.
#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace admetric {

inline unsigned thread_count() {
    if (const char* env = std::getenv("ADMETRIC_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, n). Exceptions from workers are rethrown (first one
// wins); remaining iterations may be skipped once an exception is recorded.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned workers = thread_count();
    if (n == 0) return;
    if (workers <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::vector<std::thread> pool;
    const std::size_t chunk = std::max<std::size_t>(1, n / (workers * 8));
    auto body = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            std::size_t begin = next.fetch_add(chunk);
            if (begin >= n) break;
            std::size_t end = std::min(n, begin + chunk);
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                bool expected = false;
                if (failed.compare_exchange_strong(expected, true)) error = std::current_exception();
                break;
            }
        }
    };
    for (unsigned w = 0; w + 1 < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace admetric
