#ifndef PERFCODE_CONTEXT_HPP
#define PERFCODE_CONTEXT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace perfcode {

// Run-wide knobs. Every operation that samples, enumerates or searches
// takes these so identical invocations reproduce identical output.
struct Options {
    int threads = 1;
    std::uint64_t seed = 0x5eedc0de5eedc0deULL;
    // Codes with cardinality <= 2^enum_cap_log2 may be materialized.
    int enum_cap_log2 = 20;
    // Random draws for sampled protocols (span stabilization, pair checks).
    std::uint64_t sample_budget = 10000;
    // Wall-clock cap for exhaustive subgroup searches, seconds.
    double time_limit_sec = 600.0;
    // Node cap for the constructive assignment probe.
    std::uint64_t search_node_cap = 200000;
};

// Chunked parallel loop. Calls body(begin, end, chunk_index) on
// [0,count) split into one chunk per worker. Callers aggregate
// per-chunk results in chunk order so output is schedule-independent.
template <typename F>
void parallel_for(long long count, int threads, F&& body) {
    if (count <= 0) return;
    int workers = threads;
    if (workers < 1) workers = 1;
    if (static_cast<long long>(workers) > count) workers = static_cast<int>(count);
    if (workers == 1) {
        body(0LL, count, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    long long chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        long long begin = w * chunk;
        long long end = begin + chunk < count ? begin + chunk : count;
        if (begin >= end) break;
        pool.emplace_back([&body, begin, end, w] { body(begin, end, w); });
    }
    for (auto& th : pool) th.join();
}

// Decimal rendering of 2^k for exact cardinality display.
std::string pow2_decimal(std::uint64_t k);

} // namespace perfcode

#endif
