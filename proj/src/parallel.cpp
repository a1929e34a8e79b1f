#include "liegeo/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace liegeo {

namespace {
std::size_t g_threads = 0;
}

void set_thread_count(std::size_t n) { g_threads = n; }

std::size_t thread_count() {
  if (g_threads) return g_threads;
  std::size_t hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  std::size_t workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      f(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 0; t + 1 < workers; ++t) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
}

}  // namespace liegeo
