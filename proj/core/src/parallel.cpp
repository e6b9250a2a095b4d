#include "schatten/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace schatten {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SCHATTEN_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_chunks(std::size_t count, std::size_t chunk, int threads,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
    if (count == 0) return;
    if (chunk == 0) chunk = 1;
    const std::size_t n_chunks = (count + chunk - 1) / chunk;
    const int n_workers =
        static_cast<int>(std::min<std::size_t>(resolve_threads(threads), n_chunks));

    auto run_worker = [&](int worker) {
        for (std::size_t c = static_cast<std::size_t>(worker); c < n_chunks;
             c += static_cast<std::size_t>(n_workers)) {
            const std::size_t begin = c * chunk;
            const std::size_t end = std::min(begin + chunk, count);
            fn(begin, end);
        }
    };

    if (n_workers <= 1) {
        run_worker(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers - 1));
    for (int w = 1; w < n_workers; ++w) pool.emplace_back(run_worker, w);
    run_worker(0);
    for (auto& t : pool) t.join();
}

}  // namespace schatten
