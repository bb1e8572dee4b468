#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace hilbnef {

/// Worker count used by the parallel scans. 0 means hardware concurrency.
void set_thread_count(unsigned count);
unsigned thread_count();

/// Applies fn to every element; results come back in input order, so the
/// output does not depend on the worker count.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, const T&>> {
  using R = std::invoke_result_t<Fn&, const T&>;
  std::vector<R> out(items.size());
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, thread_count()), std::max<std::size_t>(items.size() / 64, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < items.size(); i += workers) out[i] = fn(items[i]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace hilbnef
