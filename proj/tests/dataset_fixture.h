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

// On-disk evaluation fixtures: PNG pairs plus a manifest whose MOS is a
// strictly decreasing function of RDIE at a chosen spec.

#ifndef RDIE_TESTS_DATASET_FIXTURE_H_
#define RDIE_TESTS_DATASET_FIXTURE_H_

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "rdie/entropy.h"
#include "rdie/metrics.h"
#include "rdie/png_io.h"
#include "test_util.h"

namespace rdie::testing {

struct FixtureRow {
  std::string test_file;  // relative to the dataset directory
  std::string ref_file;
  std::string method;
  std::string category;
  double mos = 0.0;
  double rdie = 0.0;
};

// rows_per_category x categories rows. Each row degrades its own textured
// reference by a different blur, so RDIE values are distinct.
inline std::vector<FixtureRow> WriteRdieDataset(const TempDir& dir, int categories,
                                                int rows_per_category,
                                                const WindowSpec& spec,
                                                int side = 48) {
  static const char* kCategories[] = {"traditional", "psnr_oriented", "gan_based",
                                      "sr", "denoise"};
  std::vector<FixtureRow> rows;
  for (int c = 0; c < categories; ++c) {
    const GrayImage ref = TexturedImage(side, side, 100 + c);
    const std::string ref_file = "ref_" + std::to_string(c) + ".png";
    WriteGrayPng(dir.File(ref_file), ref);
    for (int k = 0; k < rows_per_category; ++k) {
      const GrayImage test = GaussianBlur(ref, 0.4 + 0.5 * k + 0.13 * c);
      FixtureRow row;
      row.test_file = "test_" + std::to_string(c) + "_" + std::to_string(k) + ".png";
      row.ref_file = ref_file;
      row.method = "method_" + std::to_string(k);
      row.category = kCategories[c % 5];
      row.rdie = RdieScore(test, ref, spec).value;
      row.mos = 5.0 - row.rdie;
      WriteGrayPng(dir.File(row.test_file), test);
      rows.push_back(row);
    }
  }
  return rows;
}

inline std::string WriteManifest(const TempDir& dir, const std::vector<FixtureRow>& rows,
                                 const std::string& name = "manifest.csv") {
  const std::string path = dir.File(name);
  std::ofstream out(path);
  out << "test_path,ref_path,method,category,mos\n";
  for (const auto& r : rows) {
    char mos[64];
    std::snprintf(mos, sizeof(mos), "%.17g", r.mos);
    out << r.test_file << ',' << r.ref_file << ',' << r.method << ',' << r.category
        << ',' << mos << '\n';
  }
  return path;
}

}  // namespace rdie::testing

#endif  // RDIE_TESTS_DATASET_FIXTURE_H_
