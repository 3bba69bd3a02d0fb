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

#ifndef RDIE_IMAGE_H_
#define RDIE_IMAGE_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rdie/error.h"

namespace rdie {

// Row-major plane of values. Immutable after construction except through the
// explicit mutable accessors used by builders.
template <typename T>
class Plane {
 public:
  Plane() = default;
  Plane(int width, int height, T fill = T{})
      : width_(width), height_(height) {
    CheckDims(width, height);
    values_.assign(static_cast<size_t>(width) * height, fill);
  }
  Plane(int width, int height, std::vector<T> values)
      : width_(width), height_(height), values_(std::move(values)) {
    CheckDims(width, height);
    if (values_.size() != static_cast<size_t>(width) * height) {
      throw Error(ErrorKind::kDimension,
                  "pixel buffer holds " + std::to_string(values_.size()) +
                      " values, expected " + std::to_string(width) + "x" +
                      std::to_string(height));
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return values_.size(); }

  T at(int x, int y) const {
    return values_[static_cast<size_t>(y) * width_ + x];
  }
  T& at(int x, int y) { return values_[static_cast<size_t>(y) * width_ + x]; }

  const T* Row(int y) const {
    return values_.data() + static_cast<size_t>(y) * width_;
  }
  T* Row(int y) { return values_.data() + static_cast<size_t>(y) * width_; }

  std::span<const T> values() const { return values_; }
  std::span<T> values() { return values_; }

  std::string DimString() const {
    return std::to_string(width_) + "x" + std::to_string(height_);
  }

  bool SameSize(const Plane& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Plane&, const Plane&) = default;

 private:
  static void CheckDims(int width, int height) {
    if (width < 1 || height < 1) {
      throw Error(ErrorKind::kDimension,
                  "image dimensions must be positive, got " +
                      std::to_string(width) + "x" + std::to_string(height));
    }
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> values_;
};

using GrayImage = Plane<uint8_t>;

struct RgbImage {
  Plane<uint8_t> r;
  Plane<uint8_t> g;
  Plane<uint8_t> b;
};

enum class GrayMode { kLuma, kChannelMean };

inline GrayImage ToGrayscale(const RgbImage& rgb, GrayMode mode) {
  if (!rgb.r.SameSize(rgb.g) || !rgb.r.SameSize(rgb.b)) {
    throw Error(ErrorKind::kDimension,
                "channel sizes differ: " + rgb.r.DimString() + ", " +
                    rgb.g.DimString() + ", " + rgb.b.DimString());
  }
  GrayImage out(rgb.r.width(), rgb.r.height());
  auto r = rgb.r.values();
  auto g = rgb.g.values();
  auto b = rgb.b.values();
  auto dst = out.values();
  for (size_t i = 0; i < dst.size(); ++i) {
    double v;
    if (mode == GrayMode::kLuma) {
      v = 0.299 * r[i] + 0.587 * g[i] + 0.114 * b[i];
    } else {
      v = (static_cast<int>(r[i]) + g[i] + b[i]) / 3.0;
    }
    long rounded = std::lround(v);
    dst[i] = static_cast<uint8_t>(rounded < 0 ? 0 : (rounded > 255 ? 255 : rounded));
  }
  return out;
}

}  // namespace rdie

#endif  // RDIE_IMAGE_H_
