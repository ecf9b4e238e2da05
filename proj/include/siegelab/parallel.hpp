#pragma once

#include <cstddef>
#include <functional>

namespace siegelab {

/// Thread cap: min(hardware_concurrency, SIEGEL_LAB_THREADS if set).
unsigned thread_cap();

/// Runs fn(i) for i in [0, n) on up to thread_cap() threads. Falls back to a
/// plain loop when n is small or the cap is 1. fn must not throw.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace siegelab
