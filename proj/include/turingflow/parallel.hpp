#pragma once

#include <cstddef>
#include <functional>

namespace turingflow {

/// Intra-stage data parallelism. Job count is process-global and set once by
/// the CLI (--jobs); everything defaults to single-threaded execution.
///
/// parallel_for splits [0, n) into at most jobs() contiguous chunks whose
/// boundaries depend only on n and the job count, so any reduction that sums
/// per-chunk partials in chunk order is reproducible for a fixed --jobs.
void set_jobs(int jobs);
int jobs();

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace turingflow
