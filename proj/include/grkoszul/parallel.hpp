#pragma once
#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace grk {

// Runs fn(0..n-1) on up to `jobs` threads; results keep index order, so the
// output does not depend on scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next++;
      if (i >= n) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace grk
