#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace nres {

/// Worker count: NOETHERRES_THREADS when set (clamped to [1, hardware]),
/// otherwise 1. The library's parallel paths collect results in input
/// order, so the output never depends on this value.
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("NOETHERRES_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v < 1) v = 1;
        if (v > static_cast<long>(hw)) v = static_cast<long>(hw);
        return static_cast<unsigned>(v);
    }
    return 1;
}

/// Runs fn(i) for i in [0, count) across workers; fn must only write to
/// per-index slots.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace nres
