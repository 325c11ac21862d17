#pragma once

#include <cstddef>
#include <functional>

namespace rlab {

// Hardware concurrency, capped by RESETTING_LAB_THREADS when set to a
// positive integer. Always >= 1.
unsigned worker_count();

// Calls body(i) for i in [0, n) on up to worker_count() threads. Callers
// write into per-index slots so results do not depend on scheduling.
// The first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace rlab
