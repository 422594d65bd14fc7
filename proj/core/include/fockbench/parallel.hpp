#pragma once

#include <functional>

namespace fockbench {

/// Worker count: FOCKBENCH_THREADS if set (clamped to >= 1), otherwise
/// std::thread::hardware_concurrency().
int thread_budget();

/// Runs fn(0) ... fn(count-1), possibly concurrently. The first exception
/// thrown by any task is rethrown on the calling thread after all joins.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace fockbench
