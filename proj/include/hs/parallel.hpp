#pragma once

#include <functional>

namespace hs {

// Worker count for parallel kernels: HS_NUM_THREADS if set (a positive
// integer, otherwise std::invalid_argument), else the hardware concurrency.
int thread_budget();

// Calls body(i) for i in [0, count) on up to thread_budget() threads. The
// first exception thrown by a worker is rethrown after all workers join.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace hs
