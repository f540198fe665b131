#pragma once

#include <cstddef>
#include <functional>

namespace structnet {

// Number of worker threads to use. Capped by the STRUCTNET_THREADS
// environment variable; 0 or unset means hardware concurrency.
unsigned thread_budget();

// Runs fn(i) for i in [0, n). Work items must be independent: each call may
// only write state owned by index i, so the result is identical for any
// thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace structnet
