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

// Command-line front end: `rdie score|map|eval|sweep|bench`.
//
// Exit codes:
//   0 success
//   2 bad arguments
//   3 unreadable / undecodable input (images or manifest)
//   4 dimension mismatch, or image smaller than the window
//   5 eval: no row could be scored
//   6 bench: fast and naive engines disagree

#ifndef RDIE_CLI_H_
#define RDIE_CLI_H_

#include <charconv>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rdie/bench.h"
#include "rdie/entropy.h"
#include "rdie/error.h"
#include "rdie/harness.h"
#include "rdie/manifest.h"
#include "rdie/metrics.h"
#include "rdie/png_io.h"
#include "rdie/report.h"

namespace rdie {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitIo = 3,
  kExitDimension = 4,
  kExitNoRows = 5,
  kExitCorrectness = 6,
};

inline int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
    case ErrorKind::kParse:
      return kExitIo;
    case ErrorKind::kDimension:
    case ErrorKind::kSize:
    case ErrorKind::kBounds:
      return kExitDimension;
    case ErrorKind::kCorrectness:
      return kExitCorrectness;
    default:
      return kExitUsage;
  }
}

// Parses "4", "2..16", "1,3,5" and mixtures such as "2..4,8".
inline std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  auto parse_int = [&](const std::string& s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "'" + text + "' is not an integer list");
    }
    return v;
  };
  while (std::getline(ss, item, ',')) {
    item = std::string(Trim(item));
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const int lo = parse_int(item.substr(0, dots));
    const int hi = parse_int(item.substr(dots + 2));
    if (lo > hi) {
      throw Error(ErrorKind::kInvalidArgument, "empty range '" + item + "'");
    }
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty list '" + text + "'");
  }
  return out;
}

inline std::vector<std::string> SplitNames(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = std::string(Trim(item));
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct CliConfig {
  int window = 5;
  int levels = 32;
  std::string stride = "window";
  std::string engine = "fast";
  std::string gray = "luma";
  std::string format = "json";
  std::string out;

  WindowSpec Spec() const {
    WindowSpec spec = WindowSpec::Square(window, window, levels);
    if (stride != "window") {
      const auto v = ParseIntList(stride);
      if (v.size() != 1) {
        throw Error(ErrorKind::kInvalidArgument, "--stride takes one value or 'window'");
      }
      spec.stride = v[0];
    }
    spec.Validate();
    return spec;
  }
  Engine EngineKind() const { return engine == "naive" ? Engine::kNaive : Engine::kFast; }
  GrayMode Gray() const { return gray == "mean" ? GrayMode::kChannelMean : GrayMode::kLuma; }
  OutputFormat Format() const {
    if (format == "csv") return OutputFormat::kCsv;
    if (format == "text") return OutputFormat::kText;
    return OutputFormat::kJson;
  }
};

namespace internal {

inline void AddSharedOptions(CLI::App* cmd, CliConfig& config, bool with_spec,
                             bool with_out = true) {
  if (with_spec) {
    cmd->add_option("--window", config.window, "Square window size in pixels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--levels", config.levels, "Quantization levels (2..256)")
        ->check(CLI::Range(2, 256))
        ->capture_default_str();
    cmd->add_option("--stride", config.stride, "Stride in pixels, or 'window'")
        ->capture_default_str();
  }
  cmd->add_option("--engine", config.engine, "Entropy engine")
      ->check(CLI::IsMember({"naive", "fast"}))
      ->capture_default_str();
  cmd->add_option("--gray", config.gray, "RGB to gray conversion")
      ->check(CLI::IsMember({"luma", "mean"}))
      ->capture_default_str();
  cmd->add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  if (with_out) cmd->add_option("--out", config.out, "Output path (default stdout)");
}

// Writes to --out when given, else to `out`.
inline void Emit(const CliConfig& config, std::ostream& out,
                 const std::vector<NamedTable>& doc, bool single) {
  if (config.out.empty()) {
    WriteDocument(out, doc, config.Format(), single);
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw Error(ErrorKind::kIo, config.out + ": cannot open for writing");
  WriteDocument(file, doc, config.Format(), single);
  if (!file) throw Error(ErrorKind::kIo, config.out + ": write failed");
}

inline std::vector<MetricScore> ScorePair(const GrayImage& test,
                                          const GrayImage& ref,
                                          const std::vector<std::string>& metrics,
                                          const ScoreOptions& options) {
  std::vector<MetricScore> scores;
  for (const auto& name : metrics) {
    if (!IsBuiltinMetric(name)) {
      throw Error(ErrorKind::kInvalidArgument, "unknown metric '" + name + "'");
    }
    scores.push_back({name, ComputeMetric(name, test, ref, options),
                      DescribeMetric(name, options).higher_is_better});
  }
  return scores;
}

}  // namespace internal

// Runs one CLI invocation. argv[0] is the program name.
inline int RunCli(const std::vector<std::string>& args, std::ostream& out,
                  std::ostream& err) {
  CLI::App app{"Regional differential information entropy (RDIE) image quality tool",
               "rdie"};
  app.require_subcommand(1);
  CliConfig config;

  // score
  std::string test_path, ref_path, metrics_text = "rdie";
  CLI::App* score = app.add_subcommand("score", "Score a test image against a reference");
  score->add_option("test", test_path, "Test image (PNG)")->required();
  score->add_option("ref", ref_path, "Reference image (PNG)")->required();
  score->add_option("--metrics", metrics_text, "Comma list of rdie,mse,psnr,ssim")
      ->capture_default_str();
  internal::AddSharedOptions(score, config, true);

  // map
  std::string image_path, map_out;
  CLI::App* map = app.add_subcommand("map", "Render an image's entropy map as a PNG");
  map->add_option("image", image_path, "Input image (PNG)")->required();
  internal::AddSharedOptions(map, config, true, false);
  map->add_option("--out", map_out, "Output PNG path")->required();

  // eval
  std::string manifest_path, eval_metrics = "rdie", lower_better;
  CLI::App* eval = app.add_subcommand("eval", "Correlate metrics with MOS over a manifest");
  eval->add_option("manifest", manifest_path, "Manifest CSV")->required();
  eval->add_option("--metrics", eval_metrics,
                   "Comma list; rdie,mse,psnr,ssim or manifest columns")
      ->capture_default_str();
  eval->add_option("--lower-better", lower_better,
                   "Manifest metric columns where smaller is better");
  internal::AddSharedOptions(eval, config, true);

  // sweep
  std::string sweep_manifest, windows_text = "2..16", levels_text = "2,4,8,16,24,32,48,64,80",
                              strides_text = "window";
  CLI::App* sweep = app.add_subcommand("sweep", "Grid search over window, levels and stride");
  sweep->add_option("manifest", sweep_manifest, "Manifest CSV")->required();
  sweep->add_option("--windows", windows_text, "Window sizes, e.g. 2..16 or 4,5")
      ->capture_default_str();
  sweep->add_option("--levels", levels_text, "Quantization levels, e.g. 2..80")
      ->capture_default_str();
  sweep->add_option("--strides", strides_text, "'window' or a list such as 1..5")
      ->capture_default_str();
  internal::AddSharedOptions(sweep, config, false);

  // bench
  std::string size_text = std::to_string(kDefaultBenchWidth) + "x" +
                          std::to_string(kDefaultBenchHeight);
  int reps = kMinBenchReps;
  uint32_t seed = kDefaultBenchSeed;
  CliConfig bench_config = config;
  bench_config.window = kDefaultBenchSpec.win_w;
  bench_config.levels = kDefaultBenchSpec.levels;
  CLI::App* bench = app.add_subcommand("bench", "Time naive vs fast entropy engines");
  bench->add_option("--size", size_text, "Synthetic image size WxH")->capture_default_str();
  bench->add_option("--reps", reps, "Timed repetitions (>= 5)")->capture_default_str();
  bench->add_option("--seed", seed, "Synthetic image seed")->capture_default_str();
  internal::AddSharedOptions(bench, bench_config, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*score) {
      const WindowSpec spec = config.Spec();
      const std::vector<std::string> metrics = SplitNames(metrics_text);
      const GrayImage test = ReadGrayPng(test_path, config.Gray());
      const GrayImage ref = ReadGrayPng(ref_path, config.Gray());
      if (!test.SameSize(ref)) {
        throw Error(ErrorKind::kDimension, test_path + " is " + test.DimString() +
                                               " but " + ref_path + " is " +
                                               ref.DimString());
      }
      ScoreOptions options;
      options.spec = spec;
      options.engine = config.EngineKind();
      const auto scores = internal::ScorePair(test, ref, metrics, options);
      internal::Emit(config, out,
                     {{"scores", MetricScoresTable(test_path, ref_path, spec, scores)}},
                     true);
      return kExitOk;
    }
    if (*map) {
      const WindowSpec spec = config.Spec();
      const GrayImage img = ReadGrayPng(image_path, config.Gray());
      if (img.width() < spec.win_w || img.height() < spec.win_h) {
        throw Error(ErrorKind::kSize, image_path + " is " + img.DimString() +
                                          ", smaller than the " +
                                          std::to_string(spec.win_w) + "x" +
                                          std::to_string(spec.win_h) + " window");
      }
      const EntropyMap m = ComputeEntropyMap(img, spec, config.EngineKind());
      WriteGrayPng(map_out, MapToImage(m));
      double sum = 0.0;
      for (double v : m.values) sum += v;
      Table summary{{"image", "map", "rows", "cols", "mean_entropy", "max_entropy"},
                    {{image_path, map_out, int64_t{m.rows}, int64_t{m.cols},
                      sum / static_cast<double>(m.values.size()), spec.MaxEntropy()}}};
      WriteDocument(out, {{"map", summary}}, config.Format(), true);
      return kExitOk;
    }
    if (*eval) {
      ScoreOptions options;
      options.spec = config.Spec();
      options.engine = config.EngineKind();
      options.gray = config.Gray();
      options.metrics = SplitNames(eval_metrics);
      for (const auto& name : SplitNames(lower_better)) options.lower_is_better.insert(name);
      const std::vector<ManifestEntry> entries = LoadManifest(manifest_path);
      const ScoredTable table = ScoreDataset(entries, options);
      if (table.rows.empty()) {
        err << "rdie: no scorable rows in " << manifest_path << " ("
            << table.failures.size() << " failures)\n";
        for (const auto& f : table.failures) {
          err << "  row " << f.row << ": " << f.message << '\n';
        }
        return kExitNoRows;
      }
      const auto reports = Aggregate(table);
      internal::Emit(config, out,
                     {{"reports", ReportsTable(reports)},
                      {"scores", ScoresTable(table)},
                      {"failures", FailuresTable(table.failures)}},
                     false);
      return kExitOk;
    }
    if (*sweep) {
      SweepRanges ranges;
      ranges.windows = ParseIntList(windows_text);
      ranges.levels = ParseIntList(levels_text);
      ranges.stride_equals_window = strides_text == "window";
      if (!ranges.stride_equals_window) ranges.strides = ParseIntList(strides_text);
      ScoreOptions options;
      options.engine = config.EngineKind();
      options.gray = config.Gray();
      const auto entries = LoadManifest(sweep_manifest);
      const SweepResult result = GridSweep(entries, ranges, options);
      internal::Emit(config, out,
                     {{"sweep", SweepTable(result)},
                      {"failures", FailuresTable(result.failures)}},
                     false);
      return kExitOk;
    }
    if (*bench) {
      const WindowSpec spec = bench_config.Spec();
      int width = 0, height = 0;
      const auto x = size_text.find('x');
      if (x == std::string::npos ||
          std::from_chars(size_text.data(), size_text.data() + x, width).ec != std::errc() ||
          std::from_chars(size_text.data() + x + 1, size_text.data() + size_text.size(), height)
                  .ec != std::errc() ||
          width < 1 || height < 1) {
        throw Error(ErrorKind::kInvalidArgument, "--size expects WxH, got '" + size_text + "'");
      }
      const GrayImage img = SyntheticImage(width, height, seed);
      const auto results = RunBench(img, spec, reps);
      internal::Emit(bench_config, out, {{"bench", BenchTable(results)}}, true);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "rdie: " << ErrorKindName(e.kind()) << ": " << e.what() << '\n';
    return ExitCodeFor(e.kind());
  }
  return kExitUsage;
}

inline int RunCli(int argc, const char* const* argv, std::ostream& out = std::cout,
                  std::ostream& err = std::cerr) {
  return RunCli(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace rdie

#endif  // RDIE_CLI_H_
