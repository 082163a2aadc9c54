#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace bidlab {

/// Worker count: BIDLAB_THREADS when set to a positive integer, else the hardware concurrency.
inline std::size_t thread_budget() {
    if (const char* env = std::getenv("BIDLAB_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = fn(items[i]). Results land at their input index, so the output does not depend on the
/// schedule; the exception from the lowest failing index is rethrown.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F fn) -> std::vector<decltype(fn(items.front()))> {
    using R = decltype(fn(items.front()));
    std::vector<R> out(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                out[i] = fn(items[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::size_t n = std::min(thread_budget(), items.size());
    if (n <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace bidlab
