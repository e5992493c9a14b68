// parallel.hpp - deterministic chunked parallel loops
#ifndef HYPERSPARSE_PARALLEL_HPP
#define HYPERSPARSE_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace hypersparse {

inline constexpr std::size_t kParallelChunk = 4096;

// Splits [0, count) into fixed-size chunks and hands each (chunk_index,
// begin, end) to body. Chunk boundaries do not depend on the job count, so
// per-chunk partial results merged in chunk order are bit-identical for any
// number of jobs.
inline void parallel_indexed_chunks(std::size_t count, std::size_t jobs,
                                    const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
                                    std::size_t chunk_size = kParallelChunk) {
    if (count == 0) return;
    const std::size_t chunks = (count + chunk_size - 1) / chunk_size;
    if (jobs <= 1 || chunks == 1) {
        for (std::size_t c = 0; c < chunks; ++c)
            body(c, c * chunk_size, std::min((c + 1) * chunk_size, count));
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
            body(c, c * chunk_size, std::min((c + 1) * chunk_size, count));
    };
    std::vector<std::thread> threads;
    for (std::size_t j = 0; j < std::min(jobs, chunks); ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

inline std::size_t chunk_count(std::size_t count, std::size_t chunk_size = kParallelChunk) {
    return (count + chunk_size - 1) / chunk_size;
}

}  // namespace hypersparse

#endif
