#pragma once

#include <cstddef>
#include <functional>

namespace qhx {

/// Worker count: hardware concurrency capped by the QHX_THREADS environment
/// variable (values < 1 mean serial).
std::size_t worker_count();

/// Runs fn(0), ..., fn(n−1) on a worker pool. Results must not depend on
/// scheduling; exceptions propagate (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qhx
