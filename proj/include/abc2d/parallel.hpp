#pragma once

#include <cstddef>
#include <functional>

namespace abc2d {

/// Runs body(0..n-1) on up to `jobs` threads; each index is visited once.
/// The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace abc2d
