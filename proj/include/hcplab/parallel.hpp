#pragma once

#include <cstdint>
#include <functional>

namespace hcplab {

/// Resolves a worker count: `requested` if nonzero, else HCPLAB_THREADS if set and
/// nonzero, else the hardware concurrency (at least 1).
unsigned worker_count(unsigned requested = 0);

/// Splits [0, total) into contiguous chunks, one per worker, and runs
/// `body(begin, end, worker)` on each. Blocks until all workers finish; the first
/// exception thrown by a worker is rethrown.
void parallel_chunks(std::uint64_t total, unsigned workers,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body);

}  // namespace hcplab
