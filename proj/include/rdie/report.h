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

// Tabular output. Every result (scores, correlation reports, sweeps, bench
// rows) is first flattened into a Table, which then renders as JSON (array of
// objects, the canonical form), CSV (same columns, same order) or aligned
// text for humans.
//
// Numbers are written in shortest round-trip form. Infinite values are the
// strings "inf" / "-inf"; undefined correlations are the string "undefined".

#ifndef RDIE_REPORT_H_
#define RDIE_REPORT_H_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "rdie/bench.h"
#include "rdie/harness.h"
#include "rdie/metrics.h"

namespace rdie {

struct Undefined {
  friend bool operator==(Undefined, Undefined) { return true; }
};

using Cell = std::variant<std::string, double, int64_t, bool, Undefined>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { kJson, kCsv, kText };

inline std::string FormatReal(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

inline Cell OptionalCell(const std::optional<double>& v) {
  if (v) return *v;
  return Undefined{};
}

inline nlohmann::ordered_json CellToJson(const Cell& cell) {
  using nlohmann::ordered_json;
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Undefined>) {
          return "undefined";
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return FormatReal(v);
          return v;
        } else {
          return v;
        }
      },
      cell);
}

inline std::string CellToText(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Undefined>) {
          return "undefined";
        } else if constexpr (std::is_same_v<T, double>) {
          return FormatReal(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, int64_t>) {
          return std::to_string(v);
        } else {
          return v;
        }
      },
      cell);
}

inline nlohmann::ordered_json TableToJson(const Table& table) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (size_t i = 0; i < table.columns.size(); ++i) {
      obj[table.columns[i]] = CellToJson(row[i]);
    }
    out.push_back(std::move(obj));
  }
  return out;
}

inline std::string CsvEscape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline void WriteCsv(std::ostream& os, const Table& table) {
  for (size_t i = 0; i < table.columns.size(); ++i) {
    if (i) os << ',';
    os << CsvEscape(table.columns[i]);
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << CsvEscape(CellToText(row[i]));
    }
    os << '\n';
  }
}

inline void WriteText(std::ostream& os, const Table& table) {
  std::vector<size_t> width(table.columns.size());
  std::vector<std::vector<std::string>> text;
  for (size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
  for (const auto& row : table.rows) {
    auto& t = text.emplace_back();
    for (size_t i = 0; i < row.size(); ++i) {
      std::string s = CellToText(row[i]);
      if (const double* d = std::get_if<double>(&row[i]); d && std::isfinite(*d)) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6g", *d);
        s = buf;
      }
      width[i] = std::max(width[i], s.size());
      t.push_back(std::move(s));
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) os << "  ";
      os << cells[i];
      if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size(), ' ');
    }
    os << '\n';
  };
  line(table.columns);
  for (const auto& t : text) line(t);
}

// A document is one or more named tables.
struct NamedTable {
  std::string name;
  Table table;
};

// JSON: one object keyed by table name (or the bare array when `single`).
// CSV/text: tables in order; with more than one, each is preceded by a
// "# name" line and separated by a blank line.
inline void WriteDocument(std::ostream& os, const std::vector<NamedTable>& doc,
                          OutputFormat format, bool single = false) {
  if (format == OutputFormat::kJson) {
    if (single && doc.size() == 1) {
      os << TableToJson(doc[0].table).dump(2) << '\n';
      return;
    }
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& t : doc) out[t.name] = TableToJson(t.table);
    os << out.dump(2) << '\n';
    return;
  }
  for (size_t i = 0; i < doc.size(); ++i) {
    if (doc.size() > 1) {
      if (i) os << '\n';
      os << "# " << doc[i].name << '\n';
    }
    if (format == OutputFormat::kCsv) {
      WriteCsv(os, doc[i].table);
    } else {
      WriteText(os, doc[i].table);
    }
  }
}

inline Table MetricScoresTable(const std::string& test, const std::string& ref,
                               const WindowSpec& spec,
                               const std::vector<MetricScore>& scores) {
  Table t{{"test_path", "ref_path", "window_h", "window_w", "stride", "levels",
           "metric", "value", "higher_is_better"},
          {}};
  for (const auto& s : scores) {
    t.rows.push_back({test, ref, int64_t{spec.win_h}, int64_t{spec.win_w},
                      int64_t{spec.stride}, int64_t{spec.levels},
                      s.metric_name, s.value, s.higher_is_better});
  }
  return t;
}

inline Table ScoresTable(const ScoredTable& scored) {
  Table t{{"row", "test_path", "ref_path", "method", "category", "mos"}, {}};
  for (const auto& m : scored.metrics) t.columns.push_back(m.name);
  for (const auto& row : scored.rows) {
    std::vector<Cell> cells{int64_t{row.entry.row}, row.entry.test_path,
                            row.entry.ref_path,    row.entry.method,
                            row.entry.category,    row.entry.mos};
    for (double v : row.scores) cells.emplace_back(v);
    t.rows.push_back(std::move(cells));
  }
  return t;
}

inline Table FailuresTable(const std::vector<RowFailure>& failures) {
  Table t{{"row", "test_path", "message"}, {}};
  for (const auto& f : failures) {
    t.rows.push_back({int64_t{f.row}, f.test_path, f.message});
  }
  return t;
}

inline Table ReportsTable(const std::vector<CorrelationReport>& reports) {
  Table t{{"metric", "group_by", "group", "n", "srcc", "plcc", "mean_score",
           "mean_mos"},
          {}};
  for (const auto& r : reports) {
    t.rows.push_back({r.metric_name, r.group_by, r.group_key, int64_t{r.n},
                      OptionalCell(r.srcc), OptionalCell(r.plcc), r.mean_score,
                      r.mean_mos});
  }
  return t;
}

inline Table SweepTable(const SweepResult& sweep) {
  Table t{{"window_h", "window_w", "stride", "levels", "n", "srcc_all"}, {}};
  for (const auto& c : sweep.categories) t.columns.push_back("srcc_" + c);
  for (const auto& p : sweep.points) {
    std::vector<Cell> cells{int64_t{p.spec.win_h}, int64_t{p.spec.win_w},
                            int64_t{p.spec.stride}, int64_t{p.spec.levels},
                            int64_t{p.n},           OptionalCell(p.srcc_all)};
    for (const auto& c : sweep.categories) {
      cells.push_back(OptionalCell(p.srcc_by_category.at(c)));
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

inline Table BenchTable(const std::vector<BenchResult>& results) {
  Table t{{"op", "width", "height", "window_h", "window_w", "stride", "levels",
           "reps", "median_ms", "speedup_vs_naive"},
          {}};
  for (const auto& r : results) {
    t.rows.push_back({r.op_name, int64_t{r.width}, int64_t{r.height},
                      int64_t{r.spec.win_h}, int64_t{r.spec.win_w},
                      int64_t{r.spec.stride}, int64_t{r.spec.levels},
                      int64_t{r.repetitions}, r.median_ms, r.speedup_vs_naive});
  }
  return t;
}

}  // namespace rdie

#endif  // RDIE_REPORT_H_
