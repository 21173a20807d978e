#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace domavg {

// Worker count resolution: explicit value if positive, else the
// DOMAVG_WORKERS environment variable, else 1.
int resolve_workers(int requested);

// Splits [0, total) into `workers` contiguous ranges and runs
// fn(worker_index, lo, hi) on each, collecting results in worker order so
// reductions stay deterministic. fn must be safe to run concurrently.
template <typename Acc, typename Fn>
std::vector<Acc> run_partitioned(std::uint64_t total, int workers, Fn fn) {
    if (workers < 1) workers = 1;
    if (static_cast<std::uint64_t>(workers) > total && total > 0)
        workers = static_cast<int>(total);
    std::vector<Acc> results(static_cast<std::size_t>(workers));
    if (workers == 1) {
        results[0] = fn(0, std::uint64_t{0}, total);
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
    const std::uint64_t rem = total % static_cast<std::uint64_t>(workers);
    std::uint64_t lo = 0;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
        pool.emplace_back([&, w, lo, hi] { results[static_cast<std::size_t>(w)] = fn(w, lo, hi); });
        lo = hi;
    }
    for (auto& t : pool) t.join();
    return results;
}

} // namespace domavg
