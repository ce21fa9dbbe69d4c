#pragma once

#include <cstdint>
#include <functional>

namespace skewfree {

// Number of worker threads to use: min(hardware concurrency, SKEWFREE_THREADS).
// The environment variable is re-read on every call so tests can adjust it.
unsigned thread_budget();

// Runs fn(i) for i in [0, count).  Iterations must be independent; they are
// distributed over thread_budget() workers by striding, so any writes must go
// to per-index slots.  Falls back to a plain loop when only one worker is
// available.  Exceptions thrown by fn are rethrown on the calling thread.
void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& fn);

}  // namespace skewfree
