#pragma once

#include <cstddef>
#include <functional>

namespace abwalk {

/// Worker count for `requested` threads; 0 means all hardware threads.
std::size_t resolve_threads(std::size_t requested) noexcept;

/// Calls body(i) for every i in [0, count) on up to `threads` workers.
/// Callers write results into per-index slots and reduce in index order
/// afterwards, which keeps every aggregate independent of the worker count.
/// The first exception thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace abwalk
