#include "walkmax/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

namespace walkmax {

unsigned resolve_workers(const ParallelConfig& cfg) {
    if (cfg.workers > 0) return cfg.workers;
    if (const char* env = std::getenv("WALKMAX_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_chunks(std::uint64_t item_count, std::uint64_t chunk_size, unsigned workers,
                     const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)>& body) {
    if (item_count == 0) return;
    if (chunk_size == 0) throw std::invalid_argument("parallel_chunks: chunk_size must be > 0");
    const std::uint64_t n_chunks = (item_count + chunk_size - 1) / chunk_size;
    if (workers <= 1 || n_chunks == 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c)
            body(c, c * chunk_size, std::min(item_count, (c + 1) * chunk_size));
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto run = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= n_chunks || failed.load(std::memory_order_relaxed)) return;
            try {
                body(c, c * chunk_size, std::min(item_count, (c + 1) * chunk_size));
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned t = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_chunks));
    pool.reserve(t - 1);
    for (unsigned i = 0; i + 1 < t; ++i) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    if (failed.load()) std::rethrow_exception(error);
}

}  // namespace walkmax
