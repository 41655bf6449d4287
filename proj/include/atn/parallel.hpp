#ifndef ATN_PARALLEL_HPP
#define ATN_PARALLEL_HPP

#include <functional>
#include <thread>
#include <vector>

namespace atn {

/// Static block partition of [0,n); workers own disjoint index ranges, so results
/// written to preallocated slots are identical for any thread count.
inline void parallel_for(long n, int threads, const std::function<void(long, long)>& body) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads == 1 || n < 64) {
        body(0, n);
        return;
    }
    long nt = std::min<long>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    long chunk = (n + nt - 1) / nt;
    for (long t = 0; t < nt; ++t) {
        long lo = t * chunk;
        long hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace atn

#endif
