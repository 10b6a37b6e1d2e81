#pragma once

#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace sgap {

// Apply fn(i) for i in [0, count) and collect results in index order.
// Work is split into contiguous chunks over std::async; with threads <= 1,
// count <= 1, or an unknown core count this degrades to a plain serial loop,
// so single-core hosts pay nothing. The first exception thrown by any chunk
// propagates to the caller.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t count, Fn&& fn,
                            unsigned threads = std::thread::hardware_concurrency()) {
    std::vector<R> out(count);
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    const unsigned n_chunks = std::min<std::size_t>(threads, count);
    std::vector<std::future<void>> futs;
    futs.reserve(n_chunks);
    for (unsigned c = 0; c < n_chunks; ++c) {
        const std::size_t lo = count * c / n_chunks;
        const std::size_t hi = count * (c + 1) / n_chunks;
        futs.push_back(std::async(std::launch::async, [&out, &fn, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
        }));
    }
    for (auto& f : futs) f.get();
    return out;
}

}  // namespace sgap
