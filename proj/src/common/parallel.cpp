// SPDX-License-Identifier: Apache-2.0

#include "timan/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace timan {

namespace {
std::atomic<int> g_threads{0};
}

void set_thread_budget(int threads) { g_threads.store(threads < 0 ? 0 : threads); }

int thread_budget() {
  int t = g_threads.load();
  if (t == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    t = hw == 0 ? 1 : static_cast<int>(hw);
  }
  return t;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  const std::size_t budget = static_cast<std::size_t>(thread_budget());
  if (budget <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  const std::size_t workers = std::min(budget, n);
  const std::size_t chunk = (n + workers - 1) / workers;
  std::mutex err_mu;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace timan
