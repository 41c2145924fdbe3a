#pragma once

#include <functional>

namespace walkbound {

// Worker cap: WALKBOUND_THREADS when set (>= 1), hardware concurrency
// otherwise, never more than the number of work items.
int worker_count(long long work_items);

// Runs fn(begin, end) over a contiguous partition of [0, count) on
// worker_count(count) threads. Exceptions from workers are rethrown in the
// caller (first one wins). Results must not depend on the partition; keep
// per-item outputs indexed by item and reduce after.
void parallel_for(long long count, const std::function<void(long long, long long)>& fn);

}  // namespace walkbound
