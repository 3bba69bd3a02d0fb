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

#include "rdie/bench.h"

#include <chrono>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "rdie/entropy.h"
#include "rdie/error.h"

namespace rdie {
namespace {

TEST(SyntheticImageTest, DeterministicPerSeed) {
  EXPECT_EQ(SyntheticImage(40, 30, 7), SyntheticImage(40, 30, 7));
  EXPECT_NE(SyntheticImage(40, 30, 7), SyntheticImage(40, 30, 8));
}

TEST(MedianTest, OddAndEven) {
  EXPECT_EQ(Median({3, 1, 2}), 2.0);
  EXPECT_EQ(Median({4, 1, 3, 2}), 2.5);
}

TEST(RunBenchTest, TooFewRepetitions) {
  const GrayImage img = SyntheticImage(16, 16, 1);
  for (int reps : {-1, 0, 1, 4}) {
    try {
      RunBench(img, kDefaultBenchSpec, reps);
      FAIL() << reps;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
    }
  }
}

TEST(RunBenchTest, SmokeRunHasFourRows) {
  const auto start = std::chrono::steady_clock::now();
  const auto rows = RunBench(SyntheticImage(64, 64, kDefaultBenchSeed), kDefaultBenchSpec, 5);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(seconds, 1.0);
  ASSERT_EQ(rows.size(), 4u);
  const std::vector<std::string> names = {"GIE_naive", "GIE_fast", "RIE_naive", "RIE_fast"};
  for (size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].op_name, names[i]);
    EXPECT_EQ(rows[i].width, 64);
    EXPECT_EQ(rows[i].repetitions, 5);
    EXPECT_EQ(rows[i].spec, kDefaultBenchSpec);
    EXPECT_GE(rows[i].median_ms, 0.0);
  }
  EXPECT_EQ(rows[0].speedup_vs_naive, 1.0);
  EXPECT_EQ(rows[2].speedup_vs_naive, 1.0);
}

TEST(RunBenchTest, WrongFastEngineIsCaught) {
  const GrayImage img = SyntheticImage(32, 32, 3);
  auto broken = [](const GrayImage& in, const WindowSpec& spec) {
    EntropyMap map = EntropyMapFast(in, spec);
    map.values[map.values.size() / 2] += 1e-6;
    return map;
  };
  try {
    RunBench(img, kDefaultBenchSpec, 5, broken);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCorrectness);
  }
  auto misshapen = [](const GrayImage& in, const WindowSpec& spec) {
    EntropyMap map = EntropyMapFast(in, spec);
    map.values.pop_back();
    return map;
  };
  EXPECT_THROW(RunBench(img, kDefaultBenchSpec, 5, misshapen), Error);
}

TEST(RunBenchTest, ImageSmallerThanWindow) {
  try {
    RunBench(SyntheticImage(3, 3, 1), kDefaultBenchSpec, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSize);
  }
}

}  // namespace
}  // namespace rdie
