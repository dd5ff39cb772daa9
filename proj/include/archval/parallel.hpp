#pragma once

#include <cstdint>
#include <functional>

namespace archval {

// Worker threads to use for `jobs` independent tasks: hardware
// concurrency, capped by the ARCHVAL_THREADS environment variable when
// set. Parallelism never affects results, only wall time.
int worker_count(std::int64_t jobs);

// Runs body(0..n-1), possibly concurrently. The body must only write to
// its own index's slots; the first exception thrown is rethrown on the
// caller's thread.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body);

} // namespace archval
