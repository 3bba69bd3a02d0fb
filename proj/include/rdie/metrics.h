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

// Full-reference scores: RDIE plus the MSE / PSNR / SSIM baselines.

#ifndef RDIE_METRICS_H_
#define RDIE_METRICS_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "rdie/entropy.h"
#include "rdie/error.h"
#include "rdie/image.h"

namespace rdie {

struct MetricScore {
  std::string metric_name;
  double value = 0.0;
  bool higher_is_better = false;
};

// PSNR of identical images. Compares above every finite score and is written
// as "inf" by the serializers.
inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

inline void CheckSameSize(const GrayImage& test, const GrayImage& ref) {
  if (!test.SameSize(ref)) {
    throw Error(ErrorKind::kDimension, "test image is " + test.DimString() +
                                           " but reference is " +
                                           ref.DimString());
  }
}

// Root mean square of the cellwise difference of two entropy maps.
inline double RmsDifference(const EntropyMap& a, const EntropyMap& b) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw Error(ErrorKind::kDimension,
                "entropy maps differ in shape: " + std::to_string(a.rows) +
                    "x" + std::to_string(a.cols) + " vs " +
                    std::to_string(b.rows) + "x" + std::to_string(b.cols));
  }
  double sum = 0.0;
  for (size_t i = 0; i < a.values.size(); ++i) {
    const double d = a.values[i] - b.values[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(a.values.size()));
}

inline MetricScore RdieScore(const GrayImage& test, const GrayImage& ref,
                             const WindowSpec& spec = WindowSpec::Default(),
                             Engine engine = Engine::kFast) {
  CheckSameSize(test, ref);
  const EntropyMap test_map = ComputeEntropyMap(test, spec, engine);
  const EntropyMap ref_map = ComputeEntropyMap(ref, spec, engine);
  return {"rdie", RmsDifference(test_map, ref_map), false};
}

inline MetricScore Mse(const GrayImage& test, const GrayImage& ref) {
  CheckSameSize(test, ref);
  auto a = test.values();
  auto b = ref.values();
  uint64_t sum = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    const int64_t d = static_cast<int64_t>(a[i]) - b[i];
    sum += static_cast<uint64_t>(d * d);
  }
  return {"mse", static_cast<double>(sum) / static_cast<double>(a.size()),
          false};
}

inline double PsnrFromMse(double mse) {
  if (mse == 0.0) return kInfinitePsnr;
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

inline MetricScore Psnr(const GrayImage& test, const GrayImage& ref) {
  return {"psnr", PsnrFromMse(Mse(test, ref).value), true};
}

inline constexpr int kSsimWindow = 8;

// Mean SSIM over all 8x8 windows at stride 1, uniform weights, sample
// (N-1) statistics, K1 = 0.01, K2 = 0.03, dynamic range 255. Window sums
// come from 64-bit integral images so they are exact.
inline MetricScore Ssim(const GrayImage& test, const GrayImage& ref) {
  CheckSameSize(test, ref);
  if (test.width() < kSsimWindow || test.height() < kSsimWindow) {
    throw Error(ErrorKind::kSize, "SSIM needs at least 8x8 pixels, got " +
                                      test.DimString());
  }
  const int w = test.width();
  const int h = test.height();
  const size_t stride = static_cast<size_t>(w) + 1;
  // sx, sy, sxx, syy, sxy
  std::vector<int64_t> integral(5 * stride * (h + 1), 0);
  auto at = [&](int k, int x, int y) -> int64_t& {
    return integral[(static_cast<size_t>(y) * stride + x) * 5 + k];
  };
  for (int y = 0; y < h; ++y) {
    int64_t row[5] = {0, 0, 0, 0, 0};
    for (int x = 0; x < w; ++x) {
      const int64_t a = test.at(x, y);
      const int64_t b = ref.at(x, y);
      const int64_t v[5] = {a, b, a * a, b * b, a * b};
      for (int k = 0; k < 5; ++k) {
        row[k] += v[k];
        at(k, x + 1, y + 1) = at(k, x + 1, y) + row[k];
      }
    }
  }
  constexpr double kC1 = (0.01 * 255) * (0.01 * 255);
  constexpr double kC2 = (0.03 * 255) * (0.03 * 255);
  constexpr double n = kSsimWindow * kSsimWindow;
  double total = 0.0;
  const int rows = h - kSsimWindow + 1;
  const int cols = w - kSsimWindow + 1;
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) {
      double s[5];
      for (int k = 0; k < 5; ++k) {
        s[k] = static_cast<double>(
            at(k, x + kSsimWindow, y + kSsimWindow) - at(k, x, y + kSsimWindow) -
            at(k, x + kSsimWindow, y) + at(k, x, y));
      }
      const double mx = s[0] / n;
      const double my = s[1] / n;
      const double vx = (s[2] - s[0] * mx) / (n - 1);
      const double vy = (s[3] - s[1] * my) / (n - 1);
      const double cxy = (s[4] - s[0] * my) / (n - 1);
      total += ((2 * mx * my + kC1) * (2 * cxy + kC2)) /
               ((mx * mx + my * my + kC1) * (vx + vy + kC2));
    }
  }
  return {"ssim", total / (static_cast<double>(rows) * cols), true};
}

// Renders a map as one gray pixel per region, scaling [0, max entropy] to
// [0, 255].
inline GrayImage MapToImage(const EntropyMap& map) {
  if (map.rows < 1 || map.cols < 1 || map.values.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "entropy map is empty");
  }
  const double max = map.spec.MaxEntropy();
  GrayImage out(map.cols, map.rows);
  auto dst = out.values();
  for (size_t i = 0; i < map.values.size(); ++i) {
    if (max <= 0.0) {
      dst[i] = 0;
      continue;
    }
    const long v = std::lround(map.values[i] / max * 255.0);
    dst[i] = static_cast<uint8_t>(std::clamp(v, 0L, 255L));
  }
  return out;
}

}  // namespace rdie

#endif  // RDIE_METRICS_H_
