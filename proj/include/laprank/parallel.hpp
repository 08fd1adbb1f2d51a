#pragma once

#include <cstddef>
#include <functional>

namespace laprank {

/// Worker count for per-node sweeps: LAPRANK_THREADS if set to a positive
/// integer, otherwise 1.
std::size_t thread_count();

/// Calls body(i) for every i in [0, n). Each index is visited exactly once
/// and bodies must only write state owned by their own index, so the
/// result does not depend on the schedule.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace laprank
