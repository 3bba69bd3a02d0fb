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

#ifndef RDIE_CORRELATION_H_
#define RDIE_CORRELATION_H_

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "rdie/error.h"

namespace rdie {

// 1-based ranks; tied values share the mean of the ranks they span.
// Infinities rank like any other value.
inline std::vector<double> FractionalRanks(std::span<const double> values) {
  const size_t n = values.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

namespace internal {

inline void CheckPair(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "correlation inputs differ in length: " +
                    std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  if (a.size() < 2) {
    throw Error(ErrorKind::kUndefinedCorrelation,
                "correlation needs at least 2 samples, got " +
                    std::to_string(a.size()));
  }
}

}  // namespace internal

// Pearson linear correlation, two-pass (centered) form.
inline double Plcc(std::span<const double> a, std::span<const double> b) {
  internal::CheckPair(a, b);
  const double n = static_cast<double>(a.size());
  double mean_a = 0.0, mean_b = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!std::isfinite(a[i]) || !std::isfinite(b[i])) {
      throw Error(ErrorKind::kUndefinedCorrelation,
                  "linear correlation of non-finite values");
    }
    mean_a += a[i];
    mean_b += b[i];
  }
  mean_a /= n;
  mean_b /= n;
  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  if (saa == 0.0 || sbb == 0.0) {
    throw Error(ErrorKind::kUndefinedCorrelation,
                "correlation of a constant sequence is undefined");
  }
  const double r = sab / std::sqrt(saa * sbb);
  return std::clamp(r, -1.0, 1.0);
}

// Spearman rank correlation: Pearson correlation of fractional ranks.
inline double Srcc(std::span<const double> a, std::span<const double> b) {
  internal::CheckPair(a, b);
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::isnan(a[i]) || std::isnan(b[i])) {
      throw Error(ErrorKind::kUndefinedCorrelation, "rank correlation of NaN");
    }
  }
  const std::vector<double> ra = FractionalRanks(a);
  const std::vector<double> rb = FractionalRanks(b);
  return Plcc(ra, rb);
}

}  // namespace rdie

#endif  // RDIE_CORRELATION_H_
