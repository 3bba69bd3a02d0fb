// Copyright 2026 The RDIE Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RDIE_PARALLEL_H_
#define RDIE_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rdie {

inline int DefaultThreadCount() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// Runs body(begin, end) over contiguous chunks of [0, count). Chunk
// boundaries depend only on count and the thread count, and every index is
// visited exactly once, so callers that write into index-keyed slots get
// results independent of scheduling. The first exception (by chunk order) is
// rethrown on the calling thread.
template <typename Body>
void ParallelForChunks(size_t count, int num_threads, Body&& body) {
  if (count == 0) return;
  size_t threads = static_cast<size_t>(
      num_threads > 0 ? num_threads : DefaultThreadCount());
  threads = std::min(threads, count);
  if (threads <= 1) {
    body(size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads - 1);
  const size_t per = count / threads;
  const size_t extra = count % threads;
  auto bounds = [&](size_t t) {
    size_t begin = t * per + std::min(t, extra);
    return std::pair{begin, begin + per + (t < extra ? 1 : 0)};
  };
  auto run = [&](size_t t) {
    try {
      auto [begin, end] = bounds(t);
      body(begin, end);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  for (size_t t = 1; t < threads; ++t) workers.emplace_back(run, t);
  run(0);
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

template <typename Body>
void ParallelFor(size_t count, int num_threads, Body&& body) {
  ParallelForChunks(count, num_threads, [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) body(i);
  });
}

}  // namespace rdie

#endif  // RDIE_PARALLEL_H_
