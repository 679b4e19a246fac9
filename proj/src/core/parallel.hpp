#ifndef DISCSIEVE_PARALLEL_HPP
#define DISCSIEVE_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace discsieve {

// Runs fn(chunk_index, begin, end) over [0,total) split into a FIXED number of
// chunks that does not depend on the thread count; callers merge per-chunk
// results in chunk order so output is identical for any `threads`.
inline void parallel_chunks(uint64_t total, int threads,
                            const std::function<void(size_t, uint64_t, uint64_t)>& fn,
                            size_t chunks = 64) {
    if (total == 0) return;
    if (chunks > total) chunks = size_t(total);
    std::vector<std::pair<uint64_t, uint64_t>> ranges(chunks);
    for (size_t c = 0; c < chunks; ++c) {
        ranges[c] = {total * c / chunks, total * (c + 1) / chunks};
    }
    if (threads <= 1) {
        for (size_t c = 0; c < chunks; ++c) fn(c, ranges[c].first, ranges[c].second);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t c = next.fetch_add(1);
            if (c >= chunks) break;
            fn(c, ranges[c].first, ranges[c].second);
        }
    };
    std::vector<std::thread> pool;
    int nt = std::min<int>(threads, int(chunks));
    pool.reserve(size_t(nt));
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace discsieve

#endif
