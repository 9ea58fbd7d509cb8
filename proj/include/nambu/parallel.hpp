#pragma once

#include <cstddef>
#include <functional>

namespace nambu {

/// Worker count: NAMBU_THREADS if set and positive, else the hardware concurrency.
size_t thread_count();

/// Runs fn(i) for i in [0, count) over contiguous chunks. fn must only write
/// state owned by index i, which keeps results independent of the thread count.
void parallel_for(size_t count, const std::function<void(size_t)>& fn);

}  // namespace nambu
