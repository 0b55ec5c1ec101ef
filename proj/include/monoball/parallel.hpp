#pragma once

// Minimal fork-join helper. Work item i writes only to slot i, so results do
// not depend on the number of threads.

#include <cstddef>
#include <functional>

namespace monoball {

/// Worker count: MONOBALL_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

/// Calls fn(i) for i in [0, count), spread over up to thread_count() threads.
/// The first exception thrown by any item is rethrown after all threads join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace monoball
