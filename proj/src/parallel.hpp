#pragma once

// Internal: chunked parallel execution for associative accumulation.

#include <cstddef>
#include <thread>
#include <vector>

namespace hop::detail {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, n) into at most `jobs` contiguous chunks and runs
// fn(chunk_index, begin, end) for each, on worker threads when jobs > 1.
template <typename Fn>
int run_chunks(std::size_t n, int jobs, Fn&& fn) {
    jobs = resolve_jobs(jobs);
    std::size_t chunks = static_cast<std::size_t>(jobs);
    if (chunks > n) chunks = n == 0 ? 1 : n;
    if (chunks <= 1) {
        fn(0, static_cast<std::size_t>(0), n);
        return 1;
    }
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    const std::size_t base = n / chunks, extra = n % chunks;
    std::size_t begin = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t len = base + (c < extra ? 1 : 0);
        workers.emplace_back([&fn, c, begin, len] { fn(c, begin, begin + len); });
        begin += len;
    }
    for (auto& w : workers) w.join();
    return static_cast<int>(chunks);
}

}  // namespace hop::detail
