#include "seqcorr/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace seqcorr {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_ranges(uint64_t count, int threads,
                     const std::function<void(int, uint64_t, uint64_t)>& fn) {
    int ws = std::max(1, std::min<int>(resolve_threads(threads),
                                       static_cast<int>(std::min<uint64_t>(count, 256))));
    if (ws <= 1 || count < 4096) {
        fn(0, 0, count);
        return;
    }
    uint64_t chunk = (count + ws - 1) / ws;
    std::vector<std::thread> pool;
    pool.reserve(ws - 1);
    for (int w = 1; w < ws; ++w) {
        uint64_t b = std::min(count, w * chunk);
        uint64_t e = std::min(count, b + chunk);
        if (b < e) pool.emplace_back(fn, w, b, e);
    }
    fn(0, 0, std::min(count, chunk));
    for (auto& t : pool) t.join();
}

} // namespace seqcorr
