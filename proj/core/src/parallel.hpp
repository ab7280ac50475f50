#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace affrep::detail {

// Splits [0, n) into contiguous ranges, evaluates fn(begin, end) on each in
// its own thread and folds the partial results in range order.
template <typename T, typename Fn>
T parallel_reduce(std::uint64_t n, unsigned threads, T init, Fn fn) {
  const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(n, 1));
  if (workers == 1) return init + fn(std::uint64_t{0}, n);

  std::vector<T> partial(workers, T{});
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = n * w / workers;
      const std::uint64_t end = n * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        try {
          partial[w] = fn(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  T total = init;
  for (auto& part : partial) total = total + part;
  return total;
}

}  // namespace affrep::detail
