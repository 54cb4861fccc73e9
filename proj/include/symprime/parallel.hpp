#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace symprime::detail {

inline unsigned effective_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(chunk) for chunk = 0..chunk_count-1 on up to `threads` workers.
// Work units must be independent; determinism is the caller's business
// (index the output by chunk, or reduce with an order-free operation).
template <typename Fn>
void parallel_chunks(uint64_t chunk_count, unsigned threads, Fn&& fn) {
    threads = effective_threads(threads);
    if (threads <= 1 || chunk_count <= 1) {
        for (uint64_t c = 0; c < chunk_count; ++c) fn(c);
        return;
    }
    if (threads > chunk_count) threads = static_cast<unsigned>(chunk_count);

    std::atomic<uint64_t> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};

    auto worker = [&] {
        for (;;) {
            uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= chunk_count || failed.load(std::memory_order_relaxed)) return;
            try {
                fn(c);
            } catch (...) {
                if (!failed.exchange(true)) first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace symprime::detail
