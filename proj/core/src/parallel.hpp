#pragma once

#include <cstddef>
#include <functional>

namespace curvforge::detail {

/// Worker count: CURVFORGE_THREADS if set to a positive integer, else 1.
std::size_t thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads with a static
/// partition. Bodies must write disjoint outputs. The first exception thrown
/// by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace curvforge::detail
