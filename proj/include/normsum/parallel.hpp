#ifndef NORMSUM_PARALLEL_HPP
#define NORMSUM_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace normsum {

// Global worker cap (CLI --threads). Results never depend on it: work is cut
// into a fixed chunk grid and partial results are merged in chunk order.
inline std::atomic<int>& thread_cap() {
    static std::atomic<int> cap{1};
    return cap;
}
inline void set_threads(int n) { thread_cap().store(n > 0 ? n : 1); }
inline int threads() { return thread_cap().load(); }

// Runs body(chunk_index, begin, end) over [0, total) split into `chunks`
// half-open ranges. body must only touch chunk-local state.
inline void parallel_chunks(std::int64_t total, int chunks,
                            const std::function<void(int, std::int64_t, std::int64_t)>& body) {
    if (total <= 0) return;
    if (chunks < 1) chunks = 1;
    if (chunks > total) chunks = static_cast<int>(total);
    const int workers = std::min(threads(), chunks);
    auto chunk_range = [&](int c) {
        std::int64_t lo = total * c / chunks;
        std::int64_t hi = total * (c + 1) / chunks;
        return std::pair<std::int64_t, std::int64_t>(lo, hi);
    };
    if (workers <= 1) {
        for (int c = 0; c < chunks; ++c) {
            auto [lo, hi] = chunk_range(c);
            body(c, lo, hi);
        }
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (;;) {
            int c = next.fetch_add(1);
            if (c >= chunks || failed.load()) return;
            auto [lo, hi] = chunk_range(c);
            try {
                body(c, lo, hi);
            } catch (...) {
                bool expected = false;
                if (failed.compare_exchange_strong(expected, true)) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failed.load() && first_error) std::rethrow_exception(first_error);
}

}  // namespace normsum

#endif
