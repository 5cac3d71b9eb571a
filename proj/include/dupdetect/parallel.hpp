#pragma once

#include <Eigen/Dense>

#include <functional>

namespace dupdetect {

/// Number of worker threads to use. Resolution order: the
/// DUPDETECT_THREADS environment variable (0 or unset means "auto"),
/// then std::thread::hardware_concurrency. Always >= 1.
int worker_count();

/// Splits [begin, end) into at most `workers` contiguous chunks and runs
/// fn(chunk_begin, chunk_end) on each, possibly concurrently. Exceptions
/// thrown by fn are rethrown on the calling thread after all workers join.
void parallel_chunks(Eigen::Index begin, Eigen::Index end, int workers,
                     const std::function<void(Eigen::Index, Eigen::Index)>& fn);

}  // namespace dupdetect
