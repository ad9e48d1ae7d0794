#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace primelab {

inline unsigned default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Maps fn over [begin, end) with a fixed chunk decomposition, so the merged
// result is identical for every job count and schedule. fn(i) must not
// depend on evaluation order.
template <typename Row, typename Fn>
std::vector<Row> parallel_map(uint64_t begin, uint64_t end, unsigned jobs, Fn fn) {
    if (end <= begin) return {};
    const uint64_t count = end - begin;
    std::vector<Row> out(count);
    if (jobs <= 1 || count < 128) {
        for (uint64_t i = 0; i < count; ++i) out[i] = fn(begin + i);
        return out;
    }
    constexpr uint64_t kChunk = 256;
    const uint64_t num_chunks = (count + kChunk - 1) / kChunk;
    std::atomic<uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const uint64_t c = next.fetch_add(1);
            if (c >= num_chunks) return;
            const uint64_t lo = c * kChunk;
            const uint64_t hi = std::min(count, lo + kChunk);
            for (uint64_t i = lo; i < hi; ++i) out[i] = fn(begin + i);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace primelab
