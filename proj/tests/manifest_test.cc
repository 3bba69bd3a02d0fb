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

#include "rdie/manifest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "rdie/error.h"
#include "test_util.h"

namespace rdie {
namespace {

std::vector<ManifestEntry> Parse(const std::string& text,
                                 const std::string& base = "/data") {
  std::istringstream in(text);
  return ParseManifest(in, base);
}

std::vector<ManifestIssue> IssuesOf(const std::string& text) {
  try {
    Parse(text);
  } catch (const ManifestError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    return e.issues();
  }
  ADD_FAILURE() << "expected a ManifestError";
  return {};
}

TEST(SplitCsvLineTest, QuotedFields) {
  EXPECT_EQ(SplitCsvLine("a,b,,c"), (std::vector<std::string>{"a", "b", "", "c"}));
  EXPECT_EQ(SplitCsvLine("\"x,y\",\"say \"\"hi\"\"\""),
            (std::vector<std::string>{"x,y", "say \"hi\""}));
}

TEST(ParseManifestTest, ThreeValidRows) {
  const auto entries = Parse(
      "test_path,ref_path,method,category,mos\n"
      "a.png,r.png,EDSR,psnr_oriented,3.5\n"
      "b.png,r.png,SRGAN,gan_based,4\n"
      "/abs/c.png,r.png,bicubic,traditional,-1.25\n");
  ASSERT_EQ(entries.size(), 3u);
  EXPECT_EQ(entries[0].test_path, "/data/a.png");
  EXPECT_EQ(entries[0].ref_path, "/data/r.png");
  EXPECT_EQ(entries[0].method, "EDSR");
  EXPECT_EQ(entries[0].category, "psnr_oriented");
  EXPECT_EQ(entries[0].mos, 3.5);
  EXPECT_EQ(entries[0].row, 2);
  EXPECT_EQ(entries[2].test_path, "/abs/c.png");
  EXPECT_EQ(entries[2].mos, -1.25);
  EXPECT_EQ(entries[2].row, 4);
}

TEST(ParseManifestTest, ColumnOrderBomAndWhitespace) {
  const auto entries = Parse(
      "\xEF\xBB\xBFmos, category ,method,ref_path,test_path\r\n"
      " 2.0 ,sr, m ,r.png,t.png\r\n"
      "\n");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].mos, 2.0);
  EXPECT_EQ(entries[0].category, "sr");
  EXPECT_EQ(entries[0].method, "m");
  EXPECT_EQ(entries[0].test_path, "/data/t.png");
}

TEST(ParseManifestTest, BadMosNamesRowTwo) {
  const auto issues = IssuesOf(
      "test_path,ref_path,method,category,mos\n"
      "a.png,r.png,m,c,abc\n");
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].row, 2);
  EXPECT_NE(issues[0].message.find("abc"), std::string::npos);
  try {
    Parse("test_path,ref_path,method,category,mos\na.png,r.png,m,c,abc\n");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos);
  }
}

TEST(ParseManifestTest, ExtraColumnsPassThrough) {
  const auto entries = Parse(
      "test_path,ref_path,method,category,mos,psnr_published,lpips\n"
      "a.png,r.png,m,c,1,27.5,\n"
      "b.png,r.png,m,c,2,30,0.12\n");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].extra_metrics.at("psnr_published"), 27.5);
  EXPECT_FALSE(entries[0].extra_metrics.contains("lpips"));
  EXPECT_EQ(entries[1].extra_metrics.at("lpips"), 0.12);
}

TEST(ParseManifestTest, ItemizesEveryProblem) {
  const auto issues = IssuesOf(
      "test_path,ref_path,method,category,mos,extra\n"
      "a.png,r.png,m,c,1,oops\n"
      "a.png,r.png,m,c\n"
      ",r.png,m,c,nan,\n"
      "a.png,r.png,m,c,inf,\n");
  ASSERT_EQ(issues.size(), 5u);
  EXPECT_EQ(issues[0].row, 2);
  EXPECT_EQ(issues[1].row, 3);
  EXPECT_EQ(issues[2].row, 4);
  EXPECT_EQ(issues[3].row, 4);
  EXPECT_EQ(issues[4].row, 5);
}

TEST(ParseManifestTest, MissingColumnsAndEmptyFile) {
  const auto issues = IssuesOf("test_path,ref_path,method,mos\n");
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].row, 1);
  EXPECT_NE(issues[0].message.find("category"), std::string::npos);
  EXPECT_EQ(IssuesOf("").size(), 1u);
}

TEST(LoadManifestTest, MissingFileIsIoError) {
  try {
    LoadManifest("/nonexistent/manifest.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
    EXPECT_NE(std::string(e.what()).find("/nonexistent/manifest.csv"), std::string::npos);
  }
}

TEST(LoadManifestTest, ResolvesAgainstManifestDirectory) {
  testing::TempDir dir;
  {
    std::ofstream out(dir.File("m.csv"));
    out << "test_path,ref_path,method,category,mos\nsub/a.png,../r.png,m,c,1\n";
  }
  const auto entries = LoadManifest(dir.File("m.csv"));
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].test_path, (dir.path() / "sub/a.png").lexically_normal().string());
  EXPECT_EQ(entries[0].ref_path,
            (dir.path().parent_path() / "r.png").lexically_normal().string());
}

}  // namespace
}  // namespace rdie
