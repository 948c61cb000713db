#pragma once

#include <cstdint>
#include <functional>

namespace seqcorr {

// 0 or negative -> hardware concurrency
int resolve_threads(int requested);

// Run fn(worker, begin, end) over [0, count) split into contiguous chunks,
// one per worker. Workers run on std::thread; fn must not throw.
void parallel_ranges(uint64_t count, int threads,
                     const std::function<void(int, uint64_t, uint64_t)>& fn);

} // namespace seqcorr
