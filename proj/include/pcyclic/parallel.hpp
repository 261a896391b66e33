#pragma once

// Chunked parallel map-reduce.  Chunk boundaries depend only on the range,
// never on the worker count, and results merge in chunk order, so output is
// identical for 1 and N threads.

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace pcyclic {

template <typename Result, typename ChunkFn, typename MergeFn>
Result parallel_map_reduce(std::int64_t total, std::int64_t chunk_size, unsigned threads,
                           Result init, ChunkFn chunk_fn, MergeFn merge_fn) {
    if (total <= 0) return init;
    if (chunk_size < 1) chunk_size = 1;
    const std::int64_t num_chunks = (total + chunk_size - 1) / chunk_size;
    if (threads < 1) threads = 1;

    if (threads == 1 || num_chunks == 1) {
        Result acc = init;
        for (std::int64_t c = 0; c < num_chunks; ++c) {
            std::int64_t begin = c * chunk_size;
            std::int64_t end = std::min(total, begin + chunk_size);
            acc = merge_fn(std::move(acc), chunk_fn(begin, end));
        }
        return acc;
    }

    std::vector<Result> slots(num_chunks, init);
    std::atomic<std::int64_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::int64_t c = next.fetch_add(1);
            if (c >= num_chunks) break;
            std::int64_t begin = c * chunk_size;
            std::int64_t end = std::min(total, begin + chunk_size);
            slots[c] = chunk_fn(begin, end);
        }
    };
    std::vector<std::thread> pool;
    unsigned nworkers = std::min<std::int64_t>(threads, num_chunks);
    pool.reserve(nworkers);
    for (unsigned t = 0; t < nworkers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    Result acc = init;
    for (std::int64_t c = 0; c < num_chunks; ++c) acc = merge_fn(std::move(acc), std::move(slots[c]));
    return acc;
}

}  // namespace pcyclic
