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

// Dataset scoring, metric-vs-MOS correlation and parameter sweeps.
//
// Correlations are always oriented so that a perfect metric reads +1: scores
// of lower-is-better metrics (rdie, mse, and any external metric declared
// lower-is-better) are negated before SRCC/PLCC against MOS.

#ifndef RDIE_HARNESS_H_
#define RDIE_HARNESS_H_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rdie/correlation.h"
#include "rdie/entropy.h"
#include "rdie/error.h"
#include "rdie/image.h"
#include "rdie/manifest.h"
#include "rdie/metrics.h"
#include "rdie/parallel.h"
#include "rdie/png_io.h"

namespace rdie {

struct MetricInfo {
  std::string name;
  bool higher_is_better = true;
  bool external = false;  // copied from the manifest, not computed

  friend bool operator==(const MetricInfo&, const MetricInfo&) = default;
};

inline bool IsBuiltinMetric(const std::string& name) {
  return name == "rdie" || name == "mse" || name == "psnr" || name == "ssim";
}

struct ScoreOptions {
  WindowSpec spec = WindowSpec::Default();
  Engine engine = Engine::kFast;
  GrayMode gray = GrayMode::kLuma;
  std::vector<std::string> metrics = {"rdie"};
  // External metric names whose smaller values are better.
  std::set<std::string> lower_is_better;
  int num_threads = 0;
};

inline MetricInfo DescribeMetric(const std::string& name,
                                 const ScoreOptions& options) {
  if (name == "rdie" || name == "mse") return {name, false, false};
  if (name == "psnr" || name == "ssim") return {name, true, false};
  return {name, !options.lower_is_better.contains(name), true};
}

struct ScoredRow {
  ManifestEntry entry;
  std::vector<double> scores;  // parallel to ScoredTable::metrics
};

struct RowFailure {
  int row = 0;
  std::string test_path;
  std::string message;
};

struct ScoredTable {
  std::vector<MetricInfo> metrics;
  std::vector<ScoredRow> rows;
  std::vector<RowFailure> failures;
};

using ImagePair = std::pair<GrayImage, GrayImage>;

inline ImagePair LoadPair(const ManifestEntry& entry, GrayMode gray) {
  return {ReadGrayPng(entry.test_path, gray), ReadGrayPng(entry.ref_path, gray)};
}

inline double ComputeMetric(const std::string& name, const GrayImage& test,
                            const GrayImage& ref, const ScoreOptions& options) {
  if (name == "rdie") return RdieScore(test, ref, options.spec, options.engine).value;
  if (name == "mse") return Mse(test, ref).value;
  if (name == "psnr") return Psnr(test, ref).value;
  return Ssim(test, ref).value;
}

// Scores every entry. Rows that fail (undecodable image, size mismatch, a
// missing external value) land in `failures`; the rest keep manifest order.
inline ScoredTable ScoreDataset(const std::vector<ManifestEntry>& entries,
                                const ScoreOptions& options) {
  options.spec.Validate();
  if (options.metrics.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no metrics requested");
  }
  ScoredTable table;
  for (const auto& name : options.metrics) {
    table.metrics.push_back(DescribeMetric(name, options));
  }
  const bool needs_images =
      std::any_of(table.metrics.begin(), table.metrics.end(),
                  [](const MetricInfo& m) { return !m.external; });

  struct Outcome {
    bool ok = false;
    std::vector<double> scores;
    std::string error;
  };
  std::vector<Outcome> outcomes(entries.size());
  ParallelFor(entries.size(), options.num_threads, [&](size_t i) {
    const ManifestEntry& entry = entries[i];
    Outcome& out = outcomes[i];
    try {
      std::optional<ImagePair> images;
      if (needs_images) {
        images = LoadPair(entry, options.gray);
        CheckSameSize(images->first, images->second);
      }
      for (const auto& metric : table.metrics) {
        if (metric.external) {
          auto it = entry.extra_metrics.find(metric.name);
          if (it == entry.extra_metrics.end()) {
            throw Error(ErrorKind::kParse,
                        "no value for external metric '" + metric.name + "'");
          }
          out.scores.push_back(it->second);
        } else {
          out.scores.push_back(
              ComputeMetric(metric.name, images->first, images->second, options));
        }
      }
      out.ok = true;
    } catch (const Error& e) {
      out.error = e.what();
    }
  });
  for (size_t i = 0; i < entries.size(); ++i) {
    if (outcomes[i].ok) {
      table.rows.push_back({entries[i], std::move(outcomes[i].scores)});
    } else {
      table.failures.push_back(
          {entries[i].row, entries[i].test_path, std::move(outcomes[i].error)});
    }
  }
  return table;
}

// nullopt when the correlation is undefined (n < 2, constant input, or a
// non-finite value for PLCC).
inline std::optional<double> TrySrcc(const std::vector<double>& a,
                                     const std::vector<double>& b) {
  try {
    return Srcc(a, b);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kUndefinedCorrelation) throw;
    return std::nullopt;
  }
}

inline std::optional<double> TryPlcc(const std::vector<double>& a,
                                     const std::vector<double>& b) {
  try {
    return Plcc(a, b);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kUndefinedCorrelation) throw;
    return std::nullopt;
  }
}

inline constexpr char kGroupAll[] = "all";
inline constexpr char kGroupCategory[] = "category";
inline constexpr char kGroupMethod[] = "method";

struct CorrelationReport {
  std::string metric_name;
  std::string group_by;   // "all", "category" or "method"
  std::string group_key;  // "all", or the category / method name
  int n = 0;
  std::optional<double> srcc;
  std::optional<double> plcc;
  double mean_score = 0.0;
  double mean_mos = 0.0;
};

inline CorrelationReport Correlate(const std::string& metric,
                                   bool higher_is_better,
                                   const std::string& group_by,
                                   const std::string& group_key,
                                   const std::vector<double>& scores,
                                   const std::vector<double>& mos) {
  CorrelationReport report;
  report.metric_name = metric;
  report.group_by = group_by;
  report.group_key = group_key;
  report.n = static_cast<int>(scores.size());
  std::vector<double> oriented = scores;
  if (!higher_is_better) {
    for (double& v : oriented) v = -v;
  }
  report.srcc = TrySrcc(oriented, mos);
  report.plcc = TryPlcc(oriented, mos);
  double sum = 0.0, mos_sum = 0.0;
  for (size_t i = 0; i < scores.size(); ++i) {
    sum += scores[i];
    mos_sum += mos[i];
  }
  report.mean_score = sum / static_cast<double>(scores.size());
  report.mean_mos = mos_sum / static_cast<double>(scores.size());
  return report;
}

// Per metric: the whole dataset, then each category, then each method (keys
// in lexical order).
inline std::vector<CorrelationReport> Aggregate(const ScoredTable& table) {
  if (table.rows.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no scored rows to aggregate");
  }
  std::vector<CorrelationReport> reports;
  for (size_t m = 0; m < table.metrics.size(); ++m) {
    const MetricInfo& metric = table.metrics[m];
    std::vector<double> scores, mos;
    std::map<std::string, std::pair<std::vector<double>, std::vector<double>>>
        by_category, by_method;
    for (const auto& row : table.rows) {
      const double s = row.scores[m];
      scores.push_back(s);
      mos.push_back(row.entry.mos);
      by_category[row.entry.category].first.push_back(s);
      by_category[row.entry.category].second.push_back(row.entry.mos);
      by_method[row.entry.method].first.push_back(s);
      by_method[row.entry.method].second.push_back(row.entry.mos);
    }
    reports.push_back(Correlate(metric.name, metric.higher_is_better,
                                kGroupAll, kGroupAll, scores, mos));
    for (const auto& [key, v] : by_category) {
      reports.push_back(Correlate(metric.name, metric.higher_is_better,
                                  kGroupCategory, key, v.first, v.second));
    }
    for (const auto& [key, v] : by_method) {
      reports.push_back(Correlate(metric.name, metric.higher_is_better,
                                  kGroupMethod, key, v.first, v.second));
    }
  }
  return reports;
}

// Sweep axes. Strides are either tied to the window or an explicit list.
struct SweepRanges {
  std::vector<int> windows;
  std::vector<int> levels;
  bool stride_equals_window = true;
  std::vector<int> strides;
};

inline std::vector<int> DefaultSweepWindows() {
  std::vector<int> w;
  for (int s = 2; s <= 16; ++s) w.push_back(s);
  return w;
}

inline std::vector<int> DefaultSweepLevels() {
  return {2, 4, 8, 16, 24, 32, 48, 64, 80};
}

inline SweepRanges DefaultSweepRanges() {
  return {DefaultSweepWindows(), DefaultSweepLevels(), true, {}};
}

struct SweepPoint {
  WindowSpec spec;
  int n = 0;  // entries whose images fit the window
  std::optional<double> srcc_all;
  std::map<std::string, std::optional<double>> srcc_by_category;
};

struct SweepResult {
  std::vector<std::string> categories;
  std::vector<SweepPoint> points;
  std::vector<RowFailure> failures;  // entries whose images could not be used
};

inline std::vector<WindowSpec> ExpandSweep(const SweepRanges& ranges) {
  if (ranges.windows.empty() || ranges.levels.empty() ||
      (!ranges.stride_equals_window && ranges.strides.empty())) {
    throw Error(ErrorKind::kInvalidArgument, "sweep ranges must be non-empty");
  }
  std::vector<WindowSpec> specs;
  for (int window : ranges.windows) {
    for (int levels : ranges.levels) {
      if (ranges.stride_equals_window) {
        specs.push_back(WindowSpec::Square(window, window, levels));
      } else {
        for (int stride : ranges.strides) {
          specs.push_back(WindowSpec::Square(window, stride, levels));
        }
      }
    }
  }
  for (const auto& spec : specs) spec.Validate();
  return specs;
}

// One SweepPoint per (window, level, stride) triple: SRCC of RDIE (negated)
// against MOS over all usable entries and per category. Images are decoded
// once, quantized once per level, and each distinct image's entropy map is
// computed once per triple.
inline SweepResult GridSweep(const std::vector<ManifestEntry>& entries,
                             const SweepRanges& ranges,
                             const ScoreOptions& options = {}) {
  const std::vector<WindowSpec> specs = ExpandSweep(ranges);
  SweepResult result;

  // Distinct image paths in first-seen order.
  std::vector<std::string> paths;
  std::map<std::string, size_t> path_index;
  auto intern = [&](const std::string& p) {
    auto [it, inserted] = path_index.emplace(p, paths.size());
    if (inserted) paths.push_back(p);
    return it->second;
  };
  std::vector<std::pair<size_t, size_t>> pair_index;
  for (const auto& e : entries) {
    pair_index.emplace_back(intern(e.test_path), intern(e.ref_path));
  }
  std::vector<std::optional<GrayImage>> images(paths.size());
  std::vector<std::string> decode_errors(paths.size());
  ParallelFor(paths.size(), options.num_threads, [&](size_t i) {
    try {
      images[i] = ReadGrayPng(paths[i], options.gray);
    } catch (const Error& e) {
      decode_errors[i] = e.what();
    }
  });

  std::vector<size_t> usable;
  std::set<std::string> categories;
  for (size_t i = 0; i < entries.size(); ++i) {
    const auto [t, r] = pair_index[i];
    std::string error;
    if (!images[t]) {
      error = decode_errors[t];
    } else if (!images[r]) {
      error = decode_errors[r];
    } else if (!images[t]->SameSize(*images[r])) {
      error = "test image is " + images[t]->DimString() +
              " but reference is " + images[r]->DimString();
    }
    if (!error.empty()) {
      result.failures.push_back({entries[i].row, entries[i].test_path, error});
      continue;
    }
    usable.push_back(i);
    categories.insert(entries[i].category);
  }
  result.categories.assign(categories.begin(), categories.end());

  std::map<int, std::vector<std::optional<QuantizedImage>>> quantized;
  for (const auto& spec : specs) {
    auto& levels = quantized[spec.levels];
    if (levels.empty()) {
      levels.resize(paths.size());
      ParallelFor(paths.size(), options.num_threads, [&](size_t i) {
        if (images[i]) levels[i] = Quantize(*images[i], spec.levels);
      });
    }
  }

  for (const auto& spec : specs) {
    const auto& levels = quantized.at(spec.levels);
    std::vector<std::optional<EntropyMap>> maps(paths.size());
    ParallelFor(paths.size(), options.num_threads, [&](size_t i) {
      const auto& q = levels[i];
      if (!q || q->width() < spec.win_w || q->height() < spec.win_h) return;
      maps[i] = options.engine == Engine::kNaive
                    ? EntropyMapNaive(*q, spec)
                    : EntropyMapFast(*q, spec, 1);
    });
    SweepPoint point;
    point.spec = spec;
    std::vector<double> score, mos;
    std::map<std::string, std::pair<std::vector<double>, std::vector<double>>>
        by_category;
    for (size_t i : usable) {
      const auto [t, r] = pair_index[i];
      if (!maps[t] || !maps[r]) continue;
      const double negated = -RmsDifference(*maps[t], *maps[r]);
      score.push_back(negated);
      mos.push_back(entries[i].mos);
      by_category[entries[i].category].first.push_back(negated);
      by_category[entries[i].category].second.push_back(entries[i].mos);
    }
    point.n = static_cast<int>(score.size());
    point.srcc_all = TrySrcc(score, mos);
    for (const auto& category : result.categories) {
      auto it = by_category.find(category);
      point.srcc_by_category[category] =
          it == by_category.end() ? std::nullopt
                                  : TrySrcc(it->second.first, it->second.second);
    }
    result.points.push_back(std::move(point));
  }
  return result;
}

}  // namespace rdie

#endif  // RDIE_HARNESS_H_
