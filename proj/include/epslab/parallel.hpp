#pragma once

#include <cstddef>
#include <functional>

namespace epslab {

/// Worker count for parallel maps. EPSLAB_THREADS overrides the hardware
/// default; read once per process.
std::size_t worker_count();

/// Runs body(0..count-1) on a small worker pool pulling indices from a shared
/// queue. Results must be written to index-addressed slots by the caller, so
/// the outcome is identical for every worker count. The first exception is
/// rethrown after all workers join.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& body);

}  // namespace epslab
