#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace warpcurv {

// Thread budget: WARPCURV_THREADS caps it, default hardware concurrency.
inline int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("WARPCURV_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

// Runs fn(i) for i in [0,n). Work items must be independent; results should be
// written into preallocated slots so the reduction order stays deterministic.
inline void parallel_for(int n, const std::function<void(int)>& fn) {
    int threads = thread_budget();
    if (threads <= 1 || n < 2 * threads) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        int begin = t * chunk;
        int end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([begin, end, &fn] {
            for (int i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace warpcurv
