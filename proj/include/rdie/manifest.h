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

// Evaluation manifests: CSV with header
//
//   test_path,ref_path,method,category,mos[,extra...]
//
// Relative paths resolve against the manifest's directory. Every extra column
// is a pre-computed metric; empty cells mean "not available for this row".

#ifndef RDIE_MANIFEST_H_
#define RDIE_MANIFEST_H_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rdie/error.h"

namespace rdie {

struct ManifestEntry {
  std::string test_path;
  std::string ref_path;
  std::string method;
  std::string category;
  double mos = 0.0;
  std::map<std::string, double> extra_metrics;
  int row = 0;  // 1-based line number in the manifest (header is row 1)
};

struct ManifestIssue {
  int row = 0;
  std::string message;
};

// Thrown when a manifest has one or more bad rows; carries them all.
class ManifestError : public Error {
 public:
  explicit ManifestError(std::vector<ManifestIssue> issues)
      : Error(ErrorKind::kParse, Summarize(issues)), issues_(std::move(issues)) {}

  const std::vector<ManifestIssue>& issues() const { return issues_; }

 private:
  static std::string Summarize(const std::vector<ManifestIssue>& issues) {
    std::string out = "invalid manifest:";
    for (const auto& issue : issues) {
      out += "\n  row " + std::to_string(issue.row) + ": " + issue.message;
    }
    return out;
  }

  std::vector<ManifestIssue> issues_;
};

// Splits one CSV record. Supports double-quoted fields with "" escapes.
inline std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += ch;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

inline std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::optional<double> ParseReal(std::string_view text) {
  text = Trim(text);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

inline std::vector<ManifestEntry> ParseManifest(
    std::istream& in, const std::filesystem::path& base_dir) {
  static constexpr std::string_view kRequired[] = {"test_path", "ref_path",
                                                   "method", "category", "mos"};
  std::vector<ManifestIssue> issues;
  std::string line;
  if (!std::getline(in, line)) {
    throw ManifestError({{1, "manifest is empty"}});
  }
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
    line.erase(0, 3);
  }
  std::vector<std::string> header = SplitCsvLine(line);
  for (auto& name : header) name = std::string(Trim(name));
  std::map<std::string, size_t> column;
  for (size_t i = 0; i < header.size(); ++i) column.emplace(header[i], i);
  for (auto name : kRequired) {
    if (!column.contains(std::string(name))) {
      issues.push_back({1, "missing required column '" + std::string(name) + "'"});
    }
  }
  if (!issues.empty()) throw ManifestError(std::move(issues));

  auto resolve = [&](std::string_view p) {
    std::filesystem::path path{std::string(p)};
    if (path.is_relative()) path = base_dir / path;
    return path.lexically_normal().string();
  };

  std::vector<ManifestEntry> entries;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (Trim(line).empty()) continue;
    const std::vector<std::string> fields = SplitCsvLine(line);
    if (fields.size() != header.size()) {
      issues.push_back({row, "expected " + std::to_string(header.size()) +
                                 " fields, found " +
                                 std::to_string(fields.size())});
      continue;
    }
    auto field = [&](std::string_view name) {
      return std::string(Trim(fields[column.at(std::string(name))]));
    };
    ManifestEntry entry;
    entry.row = row;
    entry.method = field("method");
    entry.category = field("category");
    const std::string test = field("test_path");
    const std::string ref = field("ref_path");
    bool ok = true;
    if (test.empty() || ref.empty()) {
      issues.push_back({row, "empty image path"});
      ok = false;
    }
    const std::string mos_text = field("mos");
    const auto mos = ParseReal(mos_text);
    if (!mos || !std::isfinite(*mos)) {
      issues.push_back({row, "mos '" + mos_text + "' is not a finite number"});
      ok = false;
    }
    for (size_t i = 0; i < header.size(); ++i) {
      const std::string& name = header[i];
      if (std::find(std::begin(kRequired), std::end(kRequired), name) !=
          std::end(kRequired)) {
        continue;
      }
      const std::string_view text = Trim(fields[i]);
      if (text.empty()) continue;
      const auto value = ParseReal(text);
      if (!value) {
        issues.push_back({row, "column '" + name + "' value '" +
                                   std::string(text) + "' is not a number"});
        ok = false;
        continue;
      }
      entry.extra_metrics[name] = *value;
    }
    if (!ok) continue;
    entry.test_path = resolve(test);
    entry.ref_path = resolve(ref);
    entry.mos = *mos;
    entries.push_back(std::move(entry));
  }
  if (!issues.empty()) throw ManifestError(std::move(issues));
  return entries;
}

inline std::vector<ManifestEntry> LoadManifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, path + ": cannot open manifest");
  return ParseManifest(in, std::filesystem::path(path).parent_path());
}

}  // namespace rdie

#endif  // RDIE_MANIFEST_H_
