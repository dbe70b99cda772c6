#pragma once

#include <cstdint>
#include <functional>

namespace walkmax {

/// Worker-pool request. 0 means "use WALKMAX_WORKERS, else hardware".
/// The worker count never changes numerical results, only wall time.
struct ParallelConfig {
    unsigned workers = 0;
};

unsigned resolve_workers(const ParallelConfig& cfg);

/// Runs body(chunk_index, begin, end) over [0, item_count) split into
/// fixed-size chunks. Chunk boundaries depend only on chunk_size, so any
/// scheduling of chunks onto threads produces the same per-chunk results.
/// The body must write only to slots owned by its chunk (or replication).
void parallel_chunks(std::uint64_t item_count, std::uint64_t chunk_size, unsigned workers,
                     const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)>& body);

}  // namespace walkmax
