// Copyright 2026 The Bioling Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Order-preserving parallel map over an index range.

#ifndef BIOLING_PARALLEL_H_
#define BIOLING_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bioling {

// Returns {fn(0), ..., fn(n-1)} in index order. Work is pulled by up to
// `workers` threads. If calls throw, the exception from the lowest failing
// index is rethrown once all threads have stopped, matching what a serial
// loop would report.
template <typename Out, typename Fn>
std::vector<Out> parallel_map(std::size_t n, std::size_t workers, Fn &&fn) {
  std::vector<Out> out(n);
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{n};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= first_failure.load()) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (i < first_failure.load()) {
          first_failure.store(i);
          error = std::current_exception();
        }
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) threads.emplace_back(work);
  work();
  for (std::thread &t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace bioling

#endif  // BIOLING_PARALLEL_H_
