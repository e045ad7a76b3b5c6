#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace pgdual {

inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Deterministic parallel reduction over [0, n).
///
/// The range is split into one contiguous block per worker and the partial
/// results are merged left to right in block order. As long as `merge` is
/// associative, the result does not depend on the worker count or on thread
/// scheduling — counterexample searches keep "lexicographically least"
/// semantics by merging with a keyed minimum.
template <typename R, typename ChunkFn, typename MergeFn>
R parallel_reduce(std::int64_t n, unsigned workers, R identity, ChunkFn chunk, MergeFn merge) {
    workers = std::max(1u, workers);
    if (n <= 0) return identity;
    if (workers == 1 || n < 64) return merge(std::move(identity), chunk(0, n));

    std::int64_t blocks = std::min<std::int64_t>(workers, n);
    std::vector<R> partial(static_cast<std::size_t>(blocks), identity);
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(blocks));
    std::int64_t base = n / blocks;
    std::int64_t rem = n % blocks;
    std::int64_t lo = 0;
    for (std::int64_t b = 0; b < blocks; ++b) {
        std::int64_t hi = lo + base + (b < rem ? 1 : 0);
        threads.emplace_back(
            [&partial, &chunk, b, lo, hi]() { partial[static_cast<std::size_t>(b)] = chunk(lo, hi); });
        lo = hi;
    }
    for (auto& t : threads) t.join();

    R out = std::move(identity);
    for (auto& p : partial) out = merge(std::move(out), std::move(p));
    return out;
}

}  // namespace pgdual
