#include "lipedge/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace lipedge {

int resolve_thread_count(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_rows(int height, int threads, const std::function<void(int, int)>& fn) {
    threads = std::min(resolve_thread_count(threads), height);
    if (threads <= 1 || height <= 1) {
        fn(0, height);
        return;
    }
    const int base = height / threads;
    const int extra = height % threads;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads) - 1);
    int row = 0;
    for (int t = 0; t < threads; ++t) {
        const int count = base + (t < extra ? 1 : 0);
        const int begin = row;
        const int end = row + count;
        row = end;
        if (t == threads - 1) {
            fn(begin, end);
        } else {
            workers.emplace_back([&fn, begin, end] { fn(begin, end); });
        }
    }
    for (auto& w : workers) w.join();
}

}  // namespace lipedge
