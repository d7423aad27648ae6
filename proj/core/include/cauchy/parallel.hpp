#pragma once

#include <functional>

namespace cauchy {

// Runs fn(0), ..., fn(count-1) on up to `threads` workers. Work items must
// not depend on execution order; callers keep determinism by indexing their
// outputs with the work-item id. Exceptions are rethrown on the caller.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace cauchy
