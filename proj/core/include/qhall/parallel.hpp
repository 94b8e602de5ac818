#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace qhall {

// Runs fn(i) for i in [0, n) on up to `jobs` threads and concatenates the
// results in index order, so the output is identical to a sequential run.
template <typename T>
std::vector<T> parallel_map_indexed(std::size_t n, int jobs,
                                    const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> workers;
    std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    for (std::size_t t = 0; t < nthreads; ++t)
        workers.emplace_back([&, t]() {
            for (std::size_t i = t; i < n; i += nthreads) out[i] = fn(i);
        });
    for (auto& w : workers) w.join();
    return out;
}

}  // namespace qhall
