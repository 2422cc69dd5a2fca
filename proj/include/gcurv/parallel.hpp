#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace gcurv {

// Thread cap: GCURV_THREADS when set, otherwise the hardware concurrency.
inline int thread_cap() {
    if (const char* env = std::getenv("GCURV_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(0..count-1) over a bounded pool. Results must be written into
// per-index slots by the caller, which keeps output deterministic regardless
// of scheduling. The first exception is rethrown after all workers join.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
    int threads = std::min(thread_cap(), count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (int i = t; i < count; i += threads) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace gcurv
