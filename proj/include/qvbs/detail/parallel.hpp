#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace qvbs {

// Runs fn(i) for i in [0, count) on up to `jobs` threads; results keep index order.
template <class T, class F>
std::vector<T> parallel_map(int count, int jobs, F fn) {
    std::vector<T> out(static_cast<size_t>(std::max(count, 0)));
    std::vector<std::exception_ptr> errors(out.size());
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < count; i = next++) {
            try {
                out[static_cast<size_t>(i)] = fn(i);
            } catch (...) {
                errors[static_cast<size_t>(i)] = std::current_exception();
            }
        }
    };
    const int n = std::clamp(jobs, 1, std::max(count, 1));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    // Report the first failure in grid order.
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace qvbs
