#pragma once

#include <cstddef>
#include <functional>

namespace liegeo {

/// Worker count used by parallel_for. 0 means hardware concurrency.
void set_thread_count(std::size_t n);
std::size_t thread_count();

/// Runs f(i) for i in [0, n). Work is chunked over a fixed number of workers;
/// callers write results into pre-sized slots indexed by i, so the outcome is
/// identical for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace liegeo
