#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <vector>

namespace jug {

// Runs fn(i) for i in [0, n). With jobs > 1 the index range is split into
// contiguous chunks executed on separate threads; callers write results into
// index-addressed slots, so output is identical for every jobs value.
template <typename F>
void parallel_for(std::size_t n, int jobs, F&& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::vector<std::future<void>> futs;
    futs.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        futs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        }));
    }
    for (auto& f : futs) f.get();  // rethrows worker exceptions
}

}  // namespace jug
