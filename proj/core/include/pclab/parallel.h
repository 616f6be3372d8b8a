// Copyright 2026 The pclab Authors
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


#ifndef PCLAB_PARALLEL_H_
#define PCLAB_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pclab {

// Runs fn(k) for k in [0, count) on up to `jobs` threads. Work items must
// write only to their own slots; the first exception (lowest index) is
// rethrown after all workers finish.
template <typename Fn>
void ParallelFor(size_t count, int jobs, Fn&& fn) {
  const size_t width =
      std::min<size_t>(count, static_cast<size_t>(std::max(jobs, 1)));
  if (width <= 1) {
    for (size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<size_t> next{0};
  std::mutex mu;
  size_t failed_index = count;
  std::exception_ptr failure;
  auto worker = [&] {
    for (size_t k = next++; k < count; k = next++) {
      try {
        fn(k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (k < failed_index) {
          failed_index = k;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(width);
  for (size_t t = 0; t < width; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Hardware concurrency, at least 1.
inline int DefaultJobs() {
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace pclab

#endif  // PCLAB_PARALLEL_H_
