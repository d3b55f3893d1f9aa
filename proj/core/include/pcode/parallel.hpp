#pragma once

#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace pcode {

// Runs fn(i) for i in [0,n) across `jobs` worker threads. Work items must be
// independent; results should be written into pre-sized slots so that the
// output order (and therefore all emitted output) is identical to the
// sequential run. The first exception thrown by any item is rethrown.
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  std::size_t stride = static_cast<std::size_t>(jobs);
  for (std::size_t w = 0; w < stride; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += stride) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& t : workers) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace pcode
