// Copyright 2026 The normkit Authors.
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

#ifndef NORMKIT_PARALLEL_H_
#define NORMKIT_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace normkit {

// Runs fn(i) for i in [0, n) over `jobs` threads using contiguous blocks.
// fn must only touch state owned by index i. The first exception thrown by
// any worker is rethrown on the calling thread.
template <typename Fn>
void ParallelFor(size_t n, unsigned jobs, Fn &&fn) {
  if (jobs <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  jobs = static_cast<unsigned>(std::min<size_t>(jobs, n));
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> workers;
  size_t block = (n + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    size_t begin = w * block;
    size_t end = std::min(n, begin + block);
    if (begin >= end) break;
    workers.emplace_back([&, begin, end] {
      try {
        for (size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto &t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace normkit

#endif  // NORMKIT_PARALLEL_H_
