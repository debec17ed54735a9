#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace limax {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Calls body(block_begin, block_end, block_index) for consecutive blocks
/// covering [0, count). Blocks are claimed dynamically; the first exception
/// thrown by any worker is rethrown on the calling thread.
template <typename Body>
void parallel_blocks(std::uint64_t count, std::uint64_t block, unsigned threads, Body&& body) {
    const std::uint64_t blocks = (count + block - 1) / block;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), blocks));
    if (threads <= 1) {
        for (std::uint64_t b = 0; b < blocks; ++b)
            body(b * block, std::min(count, (b + 1) * block), b);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= blocks) return;
            try {
                body(b * block, std::min(count, (b + 1) * block), b);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(blocks);
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

} // namespace limax
