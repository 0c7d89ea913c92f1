/*
 * Copyright 2026 The topolab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <vector>

#include "test_util.hpp"
#include "topolab/report.hpp"

namespace topolab {
namespace {

const ReportRow* find_row(const DiscrepancyReport& r, const std::string& fixture, const std::string& claim) {
  for (const auto& row : r.rows) {
    if (row.fixture == fixture && row.claim == claim) return &row;
  }
  return nullptr;
}

// Plain scan on raw masks: every closed F and x outside F have disjoint open
// neighbourhoods.
bool brute_regular(int n, const std::vector<Mask>& opens) {
  const Mask full = (Mask{1} << n) - 1;
  for (Mask u : opens) {
    const Mask f = full & ~u;
    for (int x = 0; x < n; ++x) {
      if (f >> x & 1) continue;
      bool found = false;
      for (Mask a : opens) {
        for (Mask b : opens) {
          if ((a >> x & 1) && (b & f) == f && (a & b) == 0) found = true;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

TEST(ReportTest, BundledFixtures) {
  const auto& fx = bundled_fixtures();
  ASSERT_EQ(fx.size(), 6U);
  EXPECT_EQ(fx.front().id, "example-1.8");
  EXPECT_EQ(fx.back().id, "example-2.9");
}

TEST(ReportTest, Example28RegularityMatchesScan) {
  const auto report = paper_report();
  const ReportRow* row = find_row(report, "example-2.8", "regular");
  ASSERT_NE(row, nullptr);
  std::vector<Mask> opens;
  for (Subset u : testing::example_2_8().opens()) opens.push_back(u.bits());
  const bool oracle = brute_regular(3, opens);
  EXPECT_FALSE(oracle);  // closed {m} and k: every open set holding m also holds k
  EXPECT_EQ(row->engine, oracle);
  EXPECT_EQ(row->stated, true);
  EXPECT_EQ(row->status(), "DISAGREE");
  EXPECT_EQ(row->witness["F"], Json::array({"m"}));
}

TEST(ReportTest, ScanAgreesWithEngineOnFixtures) {
  const auto report = paper_report();
  for (const char* id : {"example-2.5", "example-2.9"}) {
    std::vector<Mask> opens;
    const Space s = fixture_space(id);
    for (Subset u : s.opens()) opens.push_back(u.bits());
    const ReportRow* row = find_row(report, id, "regular");
    ASSERT_NE(row, nullptr) << id;
    EXPECT_EQ(row->engine, brute_regular(s.size(), opens)) << id;
  }
}

TEST(ReportTest, ExactlyThreeDisagreements) {
  const auto report = paper_report();
  std::vector<std::string> bad;
  for (const auto& row : report.rows) {
    if (row.kind == RowKind::kClaim && !row.agree) bad.push_back(row.fixture + " " + row.claim);
  }
  const std::vector<std::string> expected = {"example-2.6 weakly-regular", "example-2.7 almost-regular",
                                             "example-2.8 regular"};
  EXPECT_EQ(bad, expected);
  EXPECT_TRUE(report.any_disagreement());
}

TEST(ReportTest, MonitorsDoNotCountAsDisagreement) {
  const auto report = paper_report();
  const ReportRow* row = find_row(report, "all spaces, n <= 3", "cstar-cl(A) is cstar-closed");
  ASSERT_NE(row, nullptr);
  EXPECT_EQ(row->kind, RowKind::kMonitor);
  EXPECT_EQ(row->status(), "FAILS");
  DiscrepancyReport only;
  only.rows.push_back(*row);
  EXPECT_FALSE(only.any_disagreement());
}

TEST(ReportTest, JsonLinesHeader) {
  const auto report = paper_report();
  const auto lines = report.to_json_lines();
  ASSERT_EQ(lines.size(), report.rows.size() + 1);
  EXPECT_EQ(lines[0]["disagreements"], 3);
  EXPECT_EQ(lines[0]["rows"], report.rows.size());
  EXPECT_EQ(paper_report().to_json_lines(), lines);
  EXPECT_NE(report.to_table().find("DISAGREE"), std::string::npos);
}

}  // namespace
}  // namespace topolab
