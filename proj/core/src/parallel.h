//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_SRC_PARALLEL_H_
#define MOLGA_SRC_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace molga::internal {

// Runs fn(i) for i in [0, n) on up to `threads` threads. The first exception
// thrown by any task is rethrown on the calling thread.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn &&fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread &t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace molga::internal

#endif  // MOLGA_SRC_PARALLEL_H_
