#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace vinlab::harness {

int default_threads();

/// Runs fn(i) for i in [0, n) on up to `threads` workers.  Work items must be
/// independent; any shared output should be written at index i only, so that
/// results are identical for every thread count.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

/// Index-ordered map: results are collected into a vector by item index and
/// can be reduced sequentially afterwards for bit-reproducible aggregation.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, int threads, Fn&& fn) {
    std::vector<T> out(n);
    parallel_for(n, threads, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

}  // namespace vinlab::harness
