#pragma once

#include <cstddef>
#include <functional>

namespace hallfock {

// Runs fn(0..count-1) over a small worker pool.  Thread count comes from
// HALLFOCK_THREADS (capped by hardware concurrency); results must be
// written to per-index slots so reports stay deterministically ordered.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

std::size_t worker_count();

} // namespace hallfock
