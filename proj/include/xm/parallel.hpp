#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace xm {

/*
 * Evaluates fn(0..count-1) across up to `jobs` threads and returns the
 * results in index order, so output built from them is byte-identical
 * regardless of the parallelism level. Work items must be independent.
 */
template <class R, class F>
std::vector<R> parallel_map(int jobs, int count, F fn) {
    std::vector<R> results(static_cast<size_t>(count));
    if (count == 0) return results;
    const int workers = std::max(1, std::min(jobs, count));
    if (workers == 1) {
        for (int k = 0; k < count; ++k) results[static_cast<size_t>(k)] = fn(k);
        return results;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int k = next.fetch_add(1);
                if (k >= count) return;
                results[static_cast<size_t>(k)] = fn(k);
            }
        });
    }
    for (auto& worker : pool) worker.join();
    return results;
}

}  // namespace xm
