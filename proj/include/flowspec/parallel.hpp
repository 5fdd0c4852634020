#pragma once

#include <cstdint>
#include <functional>

namespace flowspec {

/// Number of worker threads to use: min(FLOWSPEC_THREADS, hardware).
/// FLOWSPEC_THREADS unset or invalid means hardware concurrency.
int thread_budget();

/// Runs fn(i) for i in [0, count). Work items must be independent;
/// callers that reduce results must do so in index order afterwards so
/// the outcome does not depend on the thread count.
void parallel_for(int count, const std::function<void(int)>& fn);

/// Derives an independent substream seed (splitmix64 over seed and stream).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace flowspec
