#pragma once

#include <cstdlib>
#include <future>
#include <string>
#include <thread>
#include <vector>

namespace slopeforge {

// Worker count for sweeps: `requested` (0 = hardware concurrency), capped by
// the SLOPEFORGE_THREADS environment variable when it is set.
inline int effective_threads(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* cap_text = std::getenv("SLOPEFORGE_THREADS")) {
        try {
            const int cap = std::stoi(cap_text);
            if (cap >= 1 && cap < n) n = cap;
        } catch (...) {
            // unparsable cap is ignored
        }
    }
    return n;
}

// Runs fn(i) for every i in [0, n) across contiguous chunks. Callers write
// results into per-index slots, so output never depends on scheduling.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    const int workers = effective_threads(threads);
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    std::vector<std::future<void>> futures;
    futures.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t lo = n * c / chunks;
        const std::size_t hi = n * (c + 1) / chunks;
        futures.push_back(std::async(std::launch::async, [lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        }));
    }
    for (auto& f : futures) f.get();  // propagates the first exception
}

}  // namespace slopeforge
