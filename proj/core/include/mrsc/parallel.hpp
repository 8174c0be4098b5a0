#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace mrsc {

// Splits [0, total) into at most `threads` contiguous chunks and runs
// fn(chunk_index, begin, end) on each. threads <= 1 runs inline. Callers are
// responsible for combining per-chunk results in chunk order so that results
// stay deterministic regardless of the thread budget.
inline void parallel_chunks(std::uint64_t total, unsigned threads,
                            const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    if (total == 0) return;
    if (threads <= 1 || total < 2 * threads) {
        fn(0, 0, total);
        return;
    }
    const std::uint64_t chunk = (total + threads - 1) / threads;
    std::vector<std::thread> pool;
    unsigned idx = 0;
    for (std::uint64_t begin = 0; begin < total; begin += chunk, ++idx) {
        const std::uint64_t end = begin + chunk < total ? begin + chunk : total;
        pool.emplace_back(fn, idx, begin, end);
    }
    for (auto& t : pool) t.join();
}

} // namespace mrsc
