#pragma once

#include <cstdint>
#include <functional>

namespace qfock {

/// Worker count: hardware concurrency, capped by the QFOCK_THREADS
/// environment variable when set (QFOCK_THREADS=1 forces sequential runs).
unsigned thread_budget();

/// Runs body(i) for i in [0, count) on up to thread_budget() threads. The
/// bodies must be independent (everything in this library is a pure function
/// over immutable values, so sharing inputs across threads is fine). Any
/// exception is rethrown on the calling thread.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body);

} // namespace qfock
