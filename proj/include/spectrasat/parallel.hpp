#pragma once

#include <cstddef>
#include <functional>

namespace spectrasat {

// Worker count: SPECTRA_SAT_THREADS if set (min 1), else available parallelism.
int worker_count();

// Runs fn(i) for i in [0, n). Work is split into contiguous chunks; every
// index is processed by exactly one worker, so writes to disjoint slots are
// race-free and results do not depend on the number of threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace spectrasat
