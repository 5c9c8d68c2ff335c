#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace pesp {

// Worker count from PESP_THREADS; 1 when unset or invalid.
inline std::size_t configured_threads() {
  const char* env = std::getenv("PESP_THREADS");
  if (env == nullptr) return 1;
  try {
    const long n = std::stol(env);
    return n >= 1 ? static_cast<std::size_t>(n) : 1;
  } catch (const std::exception&) {
    return 1;
  }
}

// out[i] = fn(i) for i < count. Results land at their own index, so the
// output does not depend on the thread count. The first exception thrown by
// any call is rethrown.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, Fn fn) {
  std::vector<Result> out(count);
  const std::size_t workers = std::min(configured_threads(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace pesp
