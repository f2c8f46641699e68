#ifndef RATDYN_PARALLEL_HPP
#define RATDYN_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace ratdyn {

// Runs body(i) for i in [0, count) on `threads` workers (0 = all cores).
// Work items must be independent; anything order-sensitive (sums, RNG use)
// should write into a per-index slot and be reduced serially afterwards.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

int resolve_thread_count(int threads);

}  // namespace ratdyn

#endif
