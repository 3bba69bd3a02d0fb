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

// Quantized regional information entropy.
//
// An image is reduced to L gray levels and every window of a sliding grid is
// summarized by the Shannon entropy (bits) of its level histogram. Two
// engines produce the same EntropyMap:
//
//   EntropyMapNaive  evaluates each window directly: for every level l the
//                    indicator f_l is summed over the window, P_l = hits/(h*w),
//                    and H = sum_l -P_l log2 P_l. Serial and deliberately
//                    literal; it is the oracle the fast engine is tested
//                    against.
//
//   EntropyMapFast   the channelized form. Each pixel is expanded to a
//                    one-hot level vector via the step activation (a 1x1
//                    convolution followed by Step_L), the L planes are
//                    average-pooled with an h x w kernel at the given stride,
//                    the entropy activation is applied per pooled element and
//                    the channels are summed. The one-hot planes are never
//                    materialized: each pixel adds a packed word holding one
//                    small counter per level, so a single integer add pools
//                    all L channels at once. When the counters do not fit in
//                    four words, sliding histograms take over. The entropy
//                    activation is tabulated over the h*w+1 possible pooled
//                    values. Output rows run in parallel.
//
// Both engines compute P_l as count / (h*w) in double and sum channels in
// ascending level order, so their results agree bit for bit.

#ifndef RDIE_ENTROPY_H_
#define RDIE_ENTROPY_H_

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rdie/error.h"
#include "rdie/image.h"
#include "rdie/parallel.h"

namespace rdie {

inline constexpr int kMaxLevels = 256;

struct WindowSpec {
  int win_h = 5;
  int win_w = 5;
  int stride = 5;
  int levels = 32;

  static constexpr WindowSpec Default() { return {5, 5, 5, 32}; }
  static constexpr WindowSpec Square(int window, int stride, int levels) {
    return {window, window, stride, levels};
  }

  int area() const { return win_h * win_w; }

  void Validate() const {
    if (win_h < 1 || win_w < 1 || stride < 1) {
      throw Error(ErrorKind::kInvalidArgument,
                  "window and stride must be >= 1, got window " +
                      std::to_string(win_h) + "x" + std::to_string(win_w) +
                      " stride " + std::to_string(stride));
    }
    if (levels < 2 || levels > kMaxLevels) {
      throw Error(ErrorKind::kInvalidArgument,
                  "quantization levels must be in [2, 256], got " +
                      std::to_string(levels));
    }
  }

  // Upper bound of any regional entropy under this spec, in bits.
  double MaxEntropy() const {
    return std::log2(static_cast<double>(std::min(levels, area())));
  }

  friend bool operator==(const WindowSpec&, const WindowSpec&) = default;
};

// Pixels as level indices in [0, levels).
class QuantizedImage {
 public:
  QuantizedImage(Plane<uint8_t> plane, int levels)
      : plane_(std::move(plane)), levels_(levels) {}

  int width() const { return plane_.width(); }
  int height() const { return plane_.height(); }
  int levels() const { return levels_; }
  const Plane<uint8_t>& plane() const { return plane_; }
  uint8_t at(int x, int y) const { return plane_.at(x, y); }

 private:
  Plane<uint8_t> plane_;
  int levels_;
};

struct EntropyMap {
  int rows = 0;
  int cols = 0;
  WindowSpec spec;
  std::vector<double> values;

  double at(int row, int col) const {
    return values[static_cast<size_t>(row) * cols + col];
  }
};

struct GridSize {
  int rows = 0;
  int cols = 0;
  friend bool operator==(const GridSize&, const GridSize&) = default;
};

inline void CheckLevels(int levels) {
  if (levels < 2 || levels > kMaxLevels) {
    throw Error(ErrorKind::kInvalidArgument,
                "quantization levels must be in [2, 256], got " +
                    std::to_string(levels));
  }
}

// floor(value * levels / 256): half-open bins of width 256/levels.
constexpr int LevelOf(int value, int levels) { return value * levels / 256; }

inline std::array<uint8_t, 256> LevelTable(int levels) {
  std::array<uint8_t, 256> table{};
  for (int v = 0; v < 256; ++v) {
    table[v] = static_cast<uint8_t>(LevelOf(v, levels));
  }
  return table;
}

inline QuantizedImage Quantize(const GrayImage& img, int levels) {
  CheckLevels(levels);
  const auto table = LevelTable(levels);
  Plane<uint8_t> out(img.width(), img.height());
  auto src = img.values();
  auto dst = out.values();
  for (size_t i = 0; i < src.size(); ++i) dst[i] = table[src[i]];
  return QuantizedImage(std::move(out), levels);
}

// Step_L: 1 on [0, 256/L), 0 elsewhere. Applied to (pixel - l*256/L) it
// selects the pixels of level l.
inline int StepActivation(double x, int levels) {
  return (x >= 0.0 && x < 256.0 / levels) ? 1 : 0;
}

// Same test in the integer domain scaled by L: pixel*L - l*256 in [0, 256).
// Exact for all inputs; the fast engine builds its channel index from it.
constexpr int ScaledStepActivation(int scaled_x) {
  return (scaled_x >= 0 && scaled_x < 256) ? 1 : 0;
}

// -p log2 p, with 0 at p = 0.
inline double EntropyActivation(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kDomain,
                "entropy activation expects a probability in [0, 1], got " +
                    std::to_string(p));
  }
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p);
}

inline GridSize GridDims(int img_h, int img_w, const WindowSpec& spec) {
  spec.Validate();
  if (img_h < spec.win_h || img_w < spec.win_w) {
    throw Error(ErrorKind::kSize,
                "image " + std::to_string(img_w) + "x" + std::to_string(img_h) +
                    " is smaller than the " + std::to_string(spec.win_w) +
                    "x" + std::to_string(spec.win_h) + " window");
  }
  return {(img_h - spec.win_h) / spec.stride + 1,
          (img_w - spec.win_w) / spec.stride + 1};
}

// Entropy of the window whose top-left corner is (x0, y0).
inline double RegionEntropy(const QuantizedImage& q, int x0, int y0,
                            const WindowSpec& spec) {
  spec.Validate();
  if (spec.levels != q.levels()) {
    throw Error(ErrorKind::kInvalidArgument,
                "spec has " + std::to_string(spec.levels) +
                    " levels but the image was quantized to " +
                    std::to_string(q.levels()));
  }
  if (x0 < 0 || y0 < 0 || x0 + spec.win_w > q.width() ||
      y0 + spec.win_h > q.height()) {
    throw Error(ErrorKind::kBounds,
                "window at (" + std::to_string(x0) + ", " + std::to_string(y0) +
                    ") does not fit in " + std::to_string(q.width()) + "x" +
                    std::to_string(q.height()));
  }
  const int area = spec.area();
  double entropy = 0.0;
  for (int level = 0; level < spec.levels; ++level) {
    int hits = 0;
    for (int i = 0; i < spec.win_h; ++i) {
      for (int j = 0; j < spec.win_w; ++j) {
        hits += q.at(x0 + j, y0 + i) == level ? 1 : 0;
      }
    }
    entropy += EntropyActivation(static_cast<double>(hits) / area);
  }
  return entropy;
}

inline EntropyMap EntropyMapNaive(const QuantizedImage& q,
                                  const WindowSpec& spec) {
  const GridSize grid = GridDims(q.height(), q.width(), spec);
  EntropyMap map{grid.rows, grid.cols, spec, {}};
  map.values.resize(static_cast<size_t>(grid.rows) * grid.cols);
  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) {
      map.values[static_cast<size_t>(r) * grid.cols + c] =
          RegionEntropy(q, c * spec.stride, r * spec.stride, spec);
    }
  }
  return map;
}

inline EntropyMap EntropyMapNaive(const GrayImage& img,
                                  const WindowSpec& spec) {
  spec.Validate();
  GridDims(img.height(), img.width(), spec);
  return EntropyMapNaive(Quantize(img, spec.levels), spec);
}

namespace internal {

// Channel index of every 8-bit value: the single l whose step activation
// fires. Throws if the one-hot property is violated.
inline std::array<uint8_t, 256> OneHotChannelTable(int levels) {
  std::array<uint8_t, 256> table{};
  for (int v = 0; v < 256; ++v) {
    int hot = -1;
    for (int l = 0; l < levels; ++l) {
      if (ScaledStepActivation(v * levels - l * 256) == 1) {
        if (hot >= 0) {
          throw Error(ErrorKind::kCorrectness, "step activation is not one-hot");
        }
        hot = l;
      }
    }
    table[v] = static_cast<uint8_t>(hot);
  }
  return table;
}

inline std::array<uint8_t, 256> IdentityTable() {
  std::array<uint8_t, 256> table{};
  for (int v = 0; v < 256; ++v) table[v] = static_cast<uint8_t>(v);
  return table;
}

// Pools one output row at a time. Histogram state is per worker.
class RowPooler {
 public:
  RowPooler(const Plane<uint8_t>& source, const std::array<uint8_t, 256>& channel,
            const WindowSpec& spec, std::span<const double> entropy_by_count)
      : source_(source),
        channel_(channel),
        spec_(spec),
        entropy_by_count_(entropy_by_count),
        sparse_(spec.levels > spec.area()),
        counts_(spec.levels, 0),
        present_((spec.levels + 63) / 64, 0) {}

  void Run(int row, int cols, double* out) {
    const int y0 = row * spec_.stride;
    const bool slide = spec_.stride < spec_.win_w;
    Clear();
    AddColumns(y0, 0, spec_.win_w);
    out[0] = Entropy();
    for (int c = 1; c < cols; ++c) {
      const int x0 = c * spec_.stride;
      if (slide) {
        RemoveColumns(y0, x0 - spec_.stride, x0);
        AddColumns(y0, x0 - spec_.stride + spec_.win_w, x0 + spec_.win_w);
      } else {
        Clear();
        AddColumns(y0, x0, x0 + spec_.win_w);
      }
      out[c] = Entropy();
    }
  }

 private:
  void Clear() {
    if (!sparse_) {
      std::fill(counts_.begin(), counts_.end(), 0u);
      return;
    }
    for (size_t w = 0; w < present_.size(); ++w) {
      for (uint64_t bits = present_[w]; bits != 0; bits &= bits - 1) {
        counts_[w * 64 + std::countr_zero(bits)] = 0;
      }
      present_[w] = 0;
    }
  }

  void AddColumns(int y0, int x_begin, int x_end) {
    for (int i = 0; i < spec_.win_h; ++i) {
      const uint8_t* px = source_.Row(y0 + i);
      for (int x = x_begin; x < x_end; ++x) {
        const unsigned l = channel_[px[x]];
        if (sparse_ && counts_[l] == 0) present_[l >> 6] |= uint64_t{1} << (l & 63);
        ++counts_[l];
      }
    }
  }

  void RemoveColumns(int y0, int x_begin, int x_end) {
    for (int i = 0; i < spec_.win_h; ++i) {
      const uint8_t* px = source_.Row(y0 + i);
      for (int x = x_begin; x < x_end; ++x) {
        const unsigned l = channel_[px[x]];
        if (--counts_[l] == 0 && sparse_) {
          present_[l >> 6] &= ~(uint64_t{1} << (l & 63));
        }
      }
    }
  }

  double Entropy() const {
    double h = 0.0;
    if (!sparse_) {
      for (uint32_t count : counts_) h += entropy_by_count_[count];
      return h;
    }
    for (size_t w = 0; w < present_.size(); ++w) {
      for (uint64_t bits = present_[w]; bits != 0; bits &= bits - 1) {
        h += entropy_by_count_[counts_[w * 64 + std::countr_zero(bits)]];
      }
    }
    return h;
  }

  const Plane<uint8_t>& source_;
  const std::array<uint8_t, 256>& channel_;
  const WindowSpec& spec_;
  std::span<const double> entropy_by_count_;
  // With more levels than window pixels most channels are empty; track the
  // occupied ones so clearing and summing skip the rest.
  const bool sparse_;
  std::vector<uint32_t> counts_;
  std::vector<uint64_t> present_;
};

// Packed-counter pooling for small level counts: every channel gets a
// `bits`-wide counter inside a 64-bit word, so pooling a pixel is a single
// table lookup and add per word. Counters never carry because each one is
// bounded by the window area.
class PackedLayout {
 public:
  static constexpr int kMaxWords = 4;

  PackedLayout(int levels, int area)
      : bits_(std::bit_width(static_cast<unsigned>(area))),
        per_word_(64 / bits_),
        words_((levels + per_word_ - 1) / per_word_),
        mask_((uint64_t{1} << bits_) - 1) {}

  bool Usable() const { return words_ <= kMaxWords; }
  int words() const { return words_; }

  uint64_t Unit(int level, int word) const {
    return Word(level) == word ? uint64_t{1} << Shift(level) : 0;
  }

  int Word(int level) const { return level / per_word_; }
  int Shift(int level) const { return bits_ * (level % per_word_); }
  uint64_t mask() const { return mask_; }

 private:
  int bits_;
  int per_word_;
  int words_;
  uint64_t mask_;
};

// kWinW > 0 fixes the window width at compile time; 0 reads it from spec.
template <int kWords, int kWinW>
void PackedRows(const Plane<uint8_t>& source,
                const std::array<uint8_t, 256>& channel, const WindowSpec& spec,
                const PackedLayout& layout,
                std::span<const double> entropy_by_count, GridSize grid,
                size_t row_begin, size_t row_end, double* out) {
  std::array<std::array<uint64_t, kWords>, 256> unit{};
  for (int v = 0; v < 256; ++v) {
    for (int w = 0; w < kWords; ++w) unit[v][w] = layout.Unit(channel[v], w);
  }
  std::array<uint8_t, kMaxLevels> slot_word{};
  std::array<uint8_t, kMaxLevels> slot_shift{};
  for (int l = 0; l < spec.levels; ++l) {
    slot_word[l] = static_cast<uint8_t>(layout.Word(l));
    slot_shift[l] = static_cast<uint8_t>(layout.Shift(l));
  }
  const uint64_t mask = layout.mask();
  const int width = source.width();
  // Channel sums of each window in packed form. Without horizontal overlap
  // every pixel is visited once, row by row; with overlap the win_h-pixel
  // column sums are formed first and then pooled across win_w columns.
  const bool overlap = spec.stride < spec.win_w;
  const int win_w = kWinW > 0 ? kWinW : spec.win_w;
  std::vector<std::array<uint64_t, kWords>> column(overlap ? width : 0);
  std::vector<std::array<uint64_t, kWords>> pooled(grid.cols);
  for (size_t r = row_begin; r < row_end; ++r) {
    const int y0 = static_cast<int>(r) * spec.stride;
    std::fill(pooled.begin(), pooled.end(), std::array<uint64_t, kWords>{});
    if (!overlap) {
      for (int i = 0; i < spec.win_h; ++i) {
        const uint8_t* px = source.Row(y0 + i);
        for (int c = 0; c < grid.cols; ++c) {
          const uint8_t* window_px = px + c * spec.stride;
          std::array<uint64_t, kWords> sum{};
          for (int j = 0; j < win_w; ++j) {
            const auto& u = unit[window_px[j]];
            for (int w = 0; w < kWords; ++w) sum[w] += u[w];
          }
          for (int w = 0; w < kWords; ++w) pooled[c][w] += sum[w];
        }
      }
    } else {
      std::fill(column.begin(), column.end(), std::array<uint64_t, kWords>{});
      for (int i = 0; i < spec.win_h; ++i) {
        const uint8_t* px = source.Row(y0 + i);
        for (int x = 0; x < width; ++x) {
          const auto& u = unit[px[x]];
          for (int w = 0; w < kWords; ++w) column[x][w] += u[w];
        }
      }
      for (int c = 0; c < grid.cols; ++c) {
        const int x0 = c * spec.stride;
        for (int j = 0; j < spec.win_w; ++j) {
          for (int w = 0; w < kWords; ++w) pooled[c][w] += column[x0 + j][w];
        }
      }
    }
    // Entropy per channel in ascending level order. Four cells advance
    // together so their accumulation chains overlap.
    double* row_out = out + r * grid.cols;
    auto count = [&](int c, int l) {
      return (pooled[c][slot_word[l]] >> slot_shift[l]) & mask;
    };
    int c = 0;
    for (; c + 4 <= grid.cols; c += 4) {
      double h0 = 0.0, h1 = 0.0, h2 = 0.0, h3 = 0.0;
      for (int l = 0; l < spec.levels; ++l) {
        h0 += entropy_by_count[count(c, l)];
        h1 += entropy_by_count[count(c + 1, l)];
        h2 += entropy_by_count[count(c + 2, l)];
        h3 += entropy_by_count[count(c + 3, l)];
      }
      row_out[c] = h0;
      row_out[c + 1] = h1;
      row_out[c + 2] = h2;
      row_out[c + 3] = h3;
    }
    for (; c < grid.cols; ++c) {
      double h = 0.0;
      for (int l = 0; l < spec.levels; ++l) h += entropy_by_count[count(c, l)];
      row_out[c] = h;
    }
  }
}

inline EntropyMap PooledEntropyMap(const Plane<uint8_t>& source,
                                   const std::array<uint8_t, 256>& channel,
                                   const WindowSpec& spec, int num_threads) {
  const GridSize grid = GridDims(source.height(), source.width(), spec);
  const int area = spec.area();
  std::vector<double> entropy_by_count(static_cast<size_t>(area) + 1);
  for (int k = 0; k <= area; ++k) {
    entropy_by_count[k] = EntropyActivation(static_cast<double>(k) / area);
  }
  EntropyMap map{grid.rows, grid.cols, spec, {}};
  map.values.resize(static_cast<size_t>(grid.rows) * grid.cols);
  const PackedLayout layout(spec.levels, area);
  ParallelForChunks(grid.rows, num_threads, [&](size_t begin, size_t end) {
    if (layout.Usable()) {
      auto run = [&]<int kWords>() {
        auto rows = [&]<int kWinW>() {
          PackedRows<kWords, kWinW>(source, channel, spec, layout,
                                    entropy_by_count, grid, begin, end,
                                    map.values.data());
        };
        switch (spec.win_w) {
          case 2: rows.template operator()<2>(); return;
          case 3: rows.template operator()<3>(); return;
          case 4: rows.template operator()<4>(); return;
          case 5: rows.template operator()<5>(); return;
          case 6: rows.template operator()<6>(); return;
          case 7: rows.template operator()<7>(); return;
          case 8: rows.template operator()<8>(); return;
          default: rows.template operator()<0>(); return;
        }
      };
      switch (layout.words()) {
        case 1: run.template operator()<1>(); return;
        case 2: run.template operator()<2>(); return;
        case 3: run.template operator()<3>(); return;
        default: run.template operator()<4>(); return;
      }
    }
    RowPooler pooler(source, channel, spec, entropy_by_count);
    for (size_t r = begin; r < end; ++r) {
      pooler.Run(static_cast<int>(r), grid.cols,
                 map.values.data() + r * grid.cols);
    }
  });
  return map;
}

}  // namespace internal

// num_threads <= 0 uses all hardware threads. The result does not depend on
// the thread count.
inline EntropyMap EntropyMapFast(const GrayImage& img, const WindowSpec& spec,
                                 int num_threads = 0) {
  spec.Validate();
  return internal::PooledEntropyMap(
      img, internal::OneHotChannelTable(spec.levels), spec, num_threads);
}

inline EntropyMap EntropyMapFast(const QuantizedImage& q,
                                 const WindowSpec& spec, int num_threads = 0) {
  spec.Validate();
  if (spec.levels != q.levels()) {
    throw Error(ErrorKind::kInvalidArgument,
                "spec has " + std::to_string(spec.levels) +
                    " levels but the image was quantized to " +
                    std::to_string(q.levels()));
  }
  static const auto kIdentity = internal::IdentityTable();
  return internal::PooledEntropyMap(q.plane(), kIdentity, spec, num_threads);
}

enum class Engine { kNaive, kFast };

inline EntropyMap ComputeEntropyMap(const GrayImage& img, const WindowSpec& spec,
                                    Engine engine) {
  return engine == Engine::kNaive ? EntropyMapNaive(img, spec)
                                  : EntropyMapFast(img, spec);
}

// Whole-image entropy, level by level: one full scan per level.
inline double GlobalEntropyNaive(const GrayImage& img, int levels) {
  const QuantizedImage q = Quantize(img, levels);
  const auto px = q.plane().values();
  const double total = static_cast<double>(px.size());
  double entropy = 0.0;
  for (int level = 0; level < levels; ++level) {
    size_t hits = 0;
    for (uint8_t v : px) hits += v == level ? 1 : 0;
    entropy += EntropyActivation(static_cast<double>(hits) / total);
  }
  return entropy;
}

// Whole-image entropy from a single histogram pass.
inline double GlobalEntropy(const GrayImage& img, int levels) {
  CheckLevels(levels);
  const auto channel = internal::OneHotChannelTable(levels);
  std::array<size_t, 256> by_value{};
  for (uint8_t v : img.values()) ++by_value[v];
  std::array<size_t, kMaxLevels> counts{};
  for (int v = 0; v < 256; ++v) counts[channel[v]] += by_value[v];
  const double total = static_cast<double>(img.size());
  double entropy = 0.0;
  for (int level = 0; level < levels; ++level) {
    entropy += EntropyActivation(static_cast<double>(counts[level]) / total);
  }
  return entropy;
}

}  // namespace rdie

#endif  // RDIE_ENTROPY_H_
