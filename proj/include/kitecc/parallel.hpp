#ifndef KITECC_PARALLEL_HPP
#define KITECC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace kitecc {

// Worker cap: KITECC_THREADS when set (clamped to [1, hardware]), otherwise
// the hardware concurrency.
unsigned thread_count();

// Runs fn(i) for i in [0, n) across the worker cap.  Results must be written
// to disjoint slots; ordering of side effects is up to the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace kitecc

#endif
