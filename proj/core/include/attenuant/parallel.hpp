#pragma once

#include <cstddef>
#include <functional>

namespace attenuant {

/// Worker count: ATTENUANT_THREADS if set, otherwise hardware concurrency.
std::size_t default_thread_count();

/// Runs fn(i) for i in [0, n). Work is split by index, so writes to
/// disjoint, preallocated slots give results independent of the thread
/// count. threads == 0 means default_thread_count().
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  std::size_t threads = 0);

}  // namespace attenuant
