#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace helpbits {

// Runs fn(chunk, begin, end) over [0, count) split into contiguous chunks,
// one per worker. The chunk decomposition depends only on (count, threads),
// so any aggregation that is order-independent per element stays
// deterministic across thread schedules.
inline void parallel_chunks(std::uint64_t count, unsigned threads,
                            const std::function<void(unsigned chunk, std::uint64_t begin,
                                                     std::uint64_t end)>& fn) {
    if (threads <= 1 || count < 2) {
        fn(0, 0, count);
        return;
    }
    const unsigned workers = threads > count ? static_cast<unsigned>(count) : threads;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t per = count / workers;
    const std::uint64_t extra = count % workers;
    std::uint64_t begin = 0;
    for (unsigned c = 0; c < workers; ++c) {
        const std::uint64_t end = begin + per + (c < extra ? 1 : 0);
        pool.emplace_back(fn, c, begin, end);
        begin = end;
    }
    for (auto& t : pool) t.join();
}

}  // namespace helpbits
