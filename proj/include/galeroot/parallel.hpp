#pragma once

#include <functional>

namespace galeroot {

/// Worker count: GALEROOT_THREADS when set, hardware concurrency otherwise.
int thread_count();

/// Runs fn(i) for i in [0, n); grid rows are independent, so results do not
/// depend on the schedule.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace galeroot
