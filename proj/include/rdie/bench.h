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

// Wall-clock comparison of the naive and fast engines for global entropy
// (GIE) and regional entropy maps (RIE).

#ifndef RDIE_BENCH_H_
#define RDIE_BENCH_H_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rdie/entropy.h"
#include "rdie/error.h"
#include "rdie/image.h"

namespace rdie {

inline constexpr int kMinBenchReps = 5;
inline constexpr int kDefaultBenchWidth = 2040;
inline constexpr int kDefaultBenchHeight = 1356;
inline constexpr uint32_t kDefaultBenchSeed = 20220101;
inline constexpr WindowSpec kDefaultBenchSpec{4, 4, 4, 8};
inline constexpr double kBenchTolerance = 1e-9;

// Uniform pseudo-random pixels. Uses the raw mt19937 stream, which is fully
// specified by the standard, so the image is identical on every platform.
inline GrayImage SyntheticImage(int width, int height, uint32_t seed) {
  std::mt19937 rng(seed);
  GrayImage img(width, height);
  for (auto& v : img.values()) v = static_cast<uint8_t>(rng() >> 24);
  return img;
}

struct BenchResult {
  std::string op_name;  // GIE_naive, GIE_fast, RIE_naive, RIE_fast
  int width = 0;
  int height = 0;
  WindowSpec spec;
  int repetitions = 0;
  double median_ms = 0.0;
  double speedup_vs_naive = 1.0;
};

inline double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Median of `reps` timed runs after one discarded warm-up run.
template <typename Fn>
double MedianMillis(int reps, Fn&& fn) {
  fn();
  std::vector<double> times;
  times.reserve(reps);
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return Median(std::move(times));
}

struct DefaultFastMap {
  EntropyMap operator()(const GrayImage& img, const WindowSpec& spec) const {
    return EntropyMapFast(img, spec);
  }
};

// Checks that both engines agree, then times the four operations serially.
// FastMap is injectable so the correctness gate itself can be tested.
template <typename FastMap = DefaultFastMap>
std::vector<BenchResult> RunBench(const GrayImage& img, const WindowSpec& spec,
                                  int reps, FastMap fast_map = {}) {
  if (reps < kMinBenchReps) {
    throw Error(ErrorKind::kInvalidArgument,
                "benchmark needs at least " + std::to_string(kMinBenchReps) +
                    " repetitions, got " + std::to_string(reps));
  }
  spec.Validate();
  GridDims(img.height(), img.width(), spec);

  const double gie_naive = GlobalEntropyNaive(img, spec.levels);
  const double gie_fast = GlobalEntropy(img, spec.levels);
  if (std::abs(gie_naive - gie_fast) > kBenchTolerance) {
    throw Error(ErrorKind::kCorrectness,
                "global entropy engines disagree: " + std::to_string(gie_naive) +
                    " vs " + std::to_string(gie_fast));
  }
  const EntropyMap naive = EntropyMapNaive(img, spec);
  const EntropyMap fast = fast_map(img, spec);
  if (naive.rows != fast.rows || naive.cols != fast.cols ||
      naive.values.size() != fast.values.size()) {
    throw Error(ErrorKind::kCorrectness, "entropy map engines disagree in shape");
  }
  for (size_t i = 0; i < naive.values.size(); ++i) {
    if (std::abs(naive.values[i] - fast.values[i]) > kBenchTolerance) {
      throw Error(ErrorKind::kCorrectness,
                  "entropy map engines disagree at cell " + std::to_string(i));
    }
  }

  volatile double sink = 0.0;
  const double t_gie_naive =
      MedianMillis(reps, [&] { sink = GlobalEntropyNaive(img, spec.levels); });
  const double t_gie_fast =
      MedianMillis(reps, [&] { sink = GlobalEntropy(img, spec.levels); });
  const double t_rie_naive = MedianMillis(
      reps, [&] { sink = EntropyMapNaive(img, spec).values[0]; });
  const double t_rie_fast =
      MedianMillis(reps, [&] { sink = fast_map(img, spec).values[0]; });
  (void)sink;

  auto row = [&](const char* name, double ms, double speedup) {
    return BenchResult{name, img.width(), img.height(), spec, reps, ms, speedup};
  };
  return {row("GIE_naive", t_gie_naive, 1.0),
          row("GIE_fast", t_gie_fast, t_gie_naive / t_gie_fast),
          row("RIE_naive", t_rie_naive, 1.0),
          row("RIE_fast", t_rie_fast, t_rie_naive / t_rie_fast)};
}

}  // namespace rdie

#endif  // RDIE_BENCH_H_
