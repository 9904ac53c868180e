#pragma once

#include <cstddef>
#include <functional>

namespace convexiq {

/// Worker count: CONVEXIQ_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int thread_count();

/// Runs task(i) for i in [0, count) on up to thread_count() threads. Tasks
/// must write to disjoint outputs; callers reduce in index order afterwards so
/// results do not depend on scheduling. The first exception thrown by any task
/// is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace convexiq
