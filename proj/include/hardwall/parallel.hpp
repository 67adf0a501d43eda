#pragma once

#include <cstddef>
#include <functional>

namespace hardwall {

// Global worker count for parallel loops (0 = hardware concurrency).
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs fn(i) for i in [0, n). Work is split into contiguous chunks, one per
// worker; fn must be safe to call concurrently for distinct i. Exceptions
// thrown by fn are captured and rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hardwall
