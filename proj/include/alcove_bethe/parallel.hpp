// Minimal strided parallel-for over an index range.  Results must land in
// per-index slots; that keeps output independent of the thread count.
#ifndef ALCOVE_BETHE_PARALLEL_HPP
#define ALCOVE_BETHE_PARALLEL_HPP

#include <functional>

namespace alcove_bethe {

// ALCOVE_BETHE_THREADS caps the worker count (default: hardware threads).
int thread_budget();

// Runs body(i) for i in [0, count); exceptions are captured on the worker
// and rethrown on the calling thread.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace alcove_bethe

#endif
