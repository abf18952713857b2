#ifndef LENZLAB_PARALLEL_HPP
#define LENZLAB_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace lenzlab {

// Worker cap: LENZLAB_THREADS when set, else hardware concurrency.
inline int worker_count() {
    if (const char* env = std::getenv("LENZLAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(chunk_index, lo, hi) over [0, n) split into contiguous chunks.
// Callers combine per-chunk results in chunk order, keeping reductions
// deterministic regardless of scheduling.
template <class Fn>
void parallel_chunks(int n, Fn&& fn) {
    int workers = std::min(worker_count(), std::max(1, n));
    if (workers <= 1 || n < 64) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> pool;
    int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int lo = w * chunk;
        int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, w, lo, hi]() { fn(w, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

} // namespace lenzlab

#endif
