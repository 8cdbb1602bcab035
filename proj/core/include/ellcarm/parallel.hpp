#pragma once

#include <cstdint>
#include <functional>

namespace ellcarm {

// Worker count: ELLCARM_THREADS if set and positive, else hardware concurrency (at least 1).
unsigned thread_count();

// Splits [0, n) into contiguous chunks, one per worker, and runs body(begin, end, worker).
// Runs inline when a single worker is available.
void parallel_chunks(std::uint64_t n,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body,
                     unsigned workers = 0);

}  // namespace ellcarm
