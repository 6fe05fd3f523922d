#pragma once

#include <cstddef>
#include <functional>

namespace aoiadv {

/// Environment variable that sets the default worker count.
inline constexpr const char* kWorkersEnv = "AOIADV_WORKERS";

/// `requested` when positive, else $AOIADV_WORKERS, else the hardware
/// concurrency (at least 1).
int worker_count(int requested = 0);

/// Runs task(i) for i in [0, n_tasks) on up to `workers` threads. Tasks must
/// write only to their own output slot. The first exception thrown by a task
/// is rethrown after all threads join.
void parallel_for(std::size_t n_tasks, int workers, const std::function<void(std::size_t)>& task);

}  // namespace aoiadv
