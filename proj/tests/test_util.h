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

// Fixture generators and independent reference implementations shared by the
// unit and acceptance tests. Nothing here calls into the library's math; the
// oracles are deliberately written the slow, obvious way.

#ifndef RDIE_TESTS_TEST_UTIL_H_
#define RDIE_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rdie/entropy.h"
#include "rdie/image.h"

namespace rdie::testing {

inline GrayImage RandomImage(int width, int height, uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  GrayImage img(width, height);
  for (auto& v : img.values()) v = static_cast<uint8_t>(dist(rng));
  return img;
}

inline GrayImage ConstantImage(int width, int height, uint8_t value) {
  return GrayImage(width, height, value);
}

inline GrayImage Checkerboard(int width, int height, int cell, uint8_t a,
                              uint8_t b) {
  GrayImage img(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      img.at(x, y) = ((x / cell + y / cell) % 2 == 0) ? a : b;
    }
  }
  return img;
}

// Vertical one-pixel stripes alternating a, b.
inline GrayImage Stripes(int width, int height, uint8_t a, uint8_t b) {
  GrayImage img(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) img.at(x, y) = x % 2 == 0 ? a : b;
  }
  return img;
}

// Two binary images with 68% black and 32% white pixels: one as a solid
// block (top rows black), one as vertical bars repeating every 25 columns.
inline constexpr int kRatioSide = 100;

inline GrayImage RatioBlockImage() {
  GrayImage img(kRatioSide, kRatioSide, 255);
  for (int y = 0; y < 68; ++y) {
    for (int x = 0; x < kRatioSide; ++x) img.at(x, y) = 0;
  }
  return img;
}

inline GrayImage RatioStripeImage() {
  GrayImage img(kRatioSide, kRatioSide);
  for (int y = 0; y < kRatioSide; ++y) {
    for (int x = 0; x < kRatioSide; ++x) img.at(x, y) = x % 25 < 17 ? 0 : 255;
  }
  return img;
}

// Smooth gradients plus high-frequency noise and a fine checker pattern.
inline GrayImage TexturedImage(int width, int height, uint32_t seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> noise(0.0, 24.0);
  GrayImage img(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      double v = 128.0 + 40.0 * std::sin(x * 0.11) * std::cos(y * 0.07) +
                 ((x / 2 + y / 2) % 2 == 0 ? 30.0 : -30.0) + noise(rng);
      img.at(x, y) = static_cast<uint8_t>(std::clamp(std::lround(v), 0L, 255L));
    }
  }
  return img;
}

// Separable Gaussian blur with edge clamping; sigma <= 0 returns a copy.
inline GrayImage GaussianBlur(const GrayImage& img, double sigma) {
  if (sigma <= 0.0) return img;
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> kernel(2 * radius + 1);
  for (int i = -radius; i <= radius; ++i) {
    kernel[i + radius] = std::exp(-(i * i) / (2.0 * sigma * sigma));
  }
  const double total = std::accumulate(kernel.begin(), kernel.end(), 0.0);
  for (auto& k : kernel) k /= total;
  const int w = img.width(), h = img.height();
  std::vector<double> tmp(static_cast<size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double s = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        s += kernel[i + radius] * img.at(std::clamp(x + i, 0, w - 1), y);
      }
      tmp[static_cast<size_t>(y) * w + x] = s;
    }
  }
  GrayImage out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double s = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        s += kernel[i + radius] * tmp[static_cast<size_t>(std::clamp(y + i, 0, h - 1)) * w + x];
      }
      out.at(x, y) = static_cast<uint8_t>(std::clamp(std::lround(s), 0L, 255L));
    }
  }
  return out;
}

// ---- Oracles -------------------------------------------------------------

// Shannon entropy in bits of a count histogram.
inline double OracleEntropyOfCounts(const std::map<int, int>& counts, int total) {
  double h = 0.0;
  for (const auto& [level, n] : counts) {
    if (n == 0) continue;
    const double p = static_cast<double>(n) / total;
    h -= p * std::log2(p);
  }
  return h;
}

inline int OracleLevel(int pixel, int levels) { return pixel * levels / 256; }

inline double OracleGlobalEntropy(const GrayImage& img, int levels) {
  std::map<int, int> counts;
  for (uint8_t v : img.values()) ++counts[OracleLevel(v, levels)];
  return OracleEntropyOfCounts(counts, static_cast<int>(img.size()));
}

inline std::vector<double> OracleEntropyMap(const GrayImage& img,
                                            const WindowSpec& spec, int* rows,
                                            int* cols) {
  *rows = (img.height() - spec.win_h) / spec.stride + 1;
  *cols = (img.width() - spec.win_w) / spec.stride + 1;
  std::vector<double> out;
  for (int r = 0; r < *rows; ++r) {
    for (int c = 0; c < *cols; ++c) {
      std::map<int, int> counts;
      for (int y = 0; y < spec.win_h; ++y) {
        for (int x = 0; x < spec.win_w; ++x) {
          ++counts[OracleLevel(img.at(c * spec.stride + x, r * spec.stride + y),
                               spec.levels)];
        }
      }
      out.push_back(OracleEntropyOfCounts(counts, spec.area()));
    }
  }
  return out;
}

// Textbook SSIM evaluated window by window with sample statistics.
inline double OracleSsim(const GrayImage& a, const GrayImage& b) {
  constexpr int kWin = 8;
  const double c1 = (0.01 * 255) * (0.01 * 255);
  const double c2 = (0.03 * 255) * (0.03 * 255);
  const int n = kWin * kWin;
  double total = 0.0;
  int windows = 0;
  for (int y0 = 0; y0 + kWin <= a.height(); ++y0) {
    for (int x0 = 0; x0 + kWin <= a.width(); ++x0) {
      double mx = 0, my = 0;
      for (int y = 0; y < kWin; ++y) {
        for (int x = 0; x < kWin; ++x) {
          mx += a.at(x0 + x, y0 + y);
          my += b.at(x0 + x, y0 + y);
        }
      }
      mx /= n;
      my /= n;
      double vx = 0, vy = 0, cxy = 0;
      for (int y = 0; y < kWin; ++y) {
        for (int x = 0; x < kWin; ++x) {
          const double dx = a.at(x0 + x, y0 + y) - mx;
          const double dy = b.at(x0 + x, y0 + y) - my;
          vx += dx * dx;
          vy += dy * dy;
          cxy += dx * dy;
        }
      }
      vx /= n - 1;
      vy /= n - 1;
      cxy /= n - 1;
      total += ((2 * mx * my + c1) * (2 * cxy + c2)) /
               ((mx * mx + my * my + c1) * (vx + vy + c2));
      ++windows;
    }
  }
  return total / windows;
}

// Average ranks by counting: rank = 1 + #smaller + (#equal - 1) / 2.
inline std::vector<double> OracleRanks(const std::vector<double>& v) {
  std::vector<double> ranks(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    int less = 0, equal = 0;
    for (double u : v) {
      less += u < v[i];
      equal += u == v[i];
    }
    ranks[i] = 1.0 + less + (equal - 1) / 2.0;
  }
  return ranks;
}

// Pearson via cov(a, b) / sqrt(var(a) var(b)), population moments.
inline double OraclePearson(const std::vector<double>& a,
                            const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  double ma = 0, mb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double cov = 0, va = 0, vb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    cov += (a[i] - ma) * (b[i] - mb);
    va += (a[i] - ma) * (a[i] - ma);
    vb += (b[i] - mb) * (b[i] - mb);
  }
  return (cov / n) / std::sqrt((va / n) * (vb / n));
}

inline double OracleSpearman(const std::vector<double>& a,
                             const std::vector<double>& b) {
  return OraclePearson(OracleRanks(a), OracleRanks(b));
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("rdie_test_" + std::to_string(rd()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string File(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace rdie::testing

#endif  // RDIE_TESTS_TEST_UTIL_H_
