#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace besovcap {

/// Maximum worker count: BESOVCAP_THREADS if set, otherwise hardware
/// concurrency. Always at least 1.
int thread_cap();

namespace detail {
void run_indexed(std::ptrdiff_t n, const std::function<void(std::ptrdiff_t)>& body);
}

/// Runs body(0) .. body(n-1) on up to thread_cap() threads. Iterations must
/// be independent and write only to per-index slots so results do not depend
/// on scheduling.
template <class Body>
void parallel_for(std::ptrdiff_t n, Body&& body) {
  detail::run_indexed(n, std::function<void(std::ptrdiff_t)>(std::forward<Body>(body)));
}

} // namespace besovcap
