#pragma once

#include <cstddef>
#include <functional>

namespace tobsusy {

// Worker count: min(hardware_concurrency, TOBOGGAN_SUSY_THREADS if set).
std::size_t thread_budget();

// Run body(i) for i in [0, count) on up to thread_budget() threads.
// Results must be written to caller-owned per-index slots; iteration
// order is not observable, so output stays deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace tobsusy
