#pragma once

#include <cstdint>
#include <functional>

namespace permlab {

/// Environment variable capping the number of worker threads.
inline constexpr const char* kWorkersEnv = "PERMLAB_WORKERS";

/// PERMLAB_WORKERS when set to a positive integer, else the hardware
/// concurrency (at least 1).
unsigned worker_count();

/// Calls body(begin, end) over contiguous chunks covering [0, n), one chunk
/// per worker. The first exception thrown by any chunk is rethrown.
void parallel_for(std::uint64_t n, const std::function<void(std::uint64_t, std::uint64_t)>& body);

}  // namespace permlab
