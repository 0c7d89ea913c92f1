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

#include <set>

#include "topolab/theorems.hpp"

namespace topolab {
namespace {

const ClauseReport* find_clause(const TheoremReport& r, const std::string& name) {
  for (const auto& c : r.clauses) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TEST(TheoremRegistryTest, ThirtyUniqueIds) {
  const auto& reg = theorem_registry();
  EXPECT_EQ(reg.size(), 30U);
  std::set<std::string> ids;
  for (const auto& info : reg) ids.insert(info.id);
  EXPECT_EQ(ids.size(), reg.size());
  EXPECT_EQ(theorem_info("T4.11").kind, TheoremKind::kComposition);
  EXPECT_EQ(theorem_info("T2.10").default_bound, 4);
}

TEST(TheoremRegistryTest, UnknownIdThrows) {
  try {
    theorem_info("T9.9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownTheorem);
  }
  EXPECT_THROW(verify_theorem("nope"), Error);
}

TEST(TheoremRegistryTest, BoundsEnforced) {
  SweepOptions o;
  o.points = 6;
  EXPECT_THROW(verify_theorem("T2.13", o), Error);
  o.points = 5;
  EXPECT_THROW(verify_theorem("T3.3", o), Error);
}

TEST(TheoremSweepTest, SpaceSweepCoversAllSpaces) {
  const auto r = verify_theorem("T2.13", {.points = 0, .jobs = 1});
  EXPECT_EQ(r.bound, 4);
  EXPECT_EQ(r.instances, 389U);
  EXPECT_TRUE(r.verified());
  EXPECT_EQ(r.counterexample(), nullptr);
  EXPECT_EQ(r.to_json()["verdict"], "verified");
  EXPECT_FALSE(r.to_json().contains("seconds"));
}

TEST(TheoremSweepTest, SmallerBound) {
  const auto r = verify_theorem("T2.10", {.points = 2, .jobs = 1});
  EXPECT_EQ(r.instances, 5U);  // 1 + 4
  EXPECT_TRUE(r.verified());
}

TEST(TheoremSweepTest, MapSweepCount) {
  // Oracle: sum over (X,Y) with |X|,|Y| <= 3 of |Y|^|X| = 24872.
  const auto r = verify_theorem("T3.3", {.points = 0, .jobs = 1});
  EXPECT_EQ(r.instances, 24872U);
}

TEST(TheoremSweepTest, MonitorsDoNotDecideVerdict) {
  const auto r = verify_theorem("R1.4", {.points = 2, .jobs = 1});
  EXPECT_TRUE(r.verified());
  const ClauseReport* m = find_clause(r, "scstar-closed => g-closed");
  ASSERT_NE(m, nullptr);
  EXPECT_EQ(m->role, ClauseRole::kMonitor);
  ASSERT_TRUE(m->witness.has_value());
  // Sierpinski space, {a} is SC*-closed but cl{a} = X is not inside the open {a}.
  EXPECT_EQ((*m->witness)["detail"]["set"], Json::array({"a"}));
}

TEST(TheoremSweepTest, TimingAddsSeconds) {
  const auto r = verify_theorem("T2.13", {.points = 2, .jobs = 1, .timing = true});
  EXPECT_TRUE(r.to_json().contains("seconds"));
}

TEST(TheoremSweepTest, JsonIndependentOfJobs) {
  for (const char* id : {"R1.4", "T2.15", "T3.6", "T4.12"}) {
    const std::string a = verify_theorem(id, {.points = 0, .jobs = 1}).to_json().dump();
    const std::string b = verify_theorem(id, {.points = 0, .jobs = 3}).to_json().dump();
    const std::string c = verify_theorem(id, {.points = 0, .jobs = 1}).to_json().dump();
    EXPECT_EQ(a, b) << id;
    EXPECT_EQ(a, c) << id;
  }
}

TEST(TheoremSweepTest, HausdorffReadingSwapsRoles) {
  const auto a = verify_theorem("T2.15", {.points = 3, .jobs = 1});
  const auto b = verify_theorem("T2.15", {.points = 3, .jobs = 1, .classical_hausdorff = true});
  EXPECT_NE(a.formalization, b.formalization);
  EXPECT_EQ(a.instances, b.instances);
}

TEST(TheoremSweepTest, CompositionSmallBound) {
  const auto r = verify_theorem("T4.11", {.points = 2, .jobs = 1});
  EXPECT_GT(r.instances, 0U);
  EXPECT_TRUE(r.verified());
}

TEST(ImplicationTest, WeaklyRegularDoesNotImplyRegular) {
  const auto r = check_implication({{"weakly-regular"}, "regular", 3}, {.jobs = 1});
  EXPECT_FALSE(r.verified());
  const ClauseReport* c = r.counterexample();
  ASSERT_NE(c, nullptr);
  ASSERT_TRUE(c->witness.has_value());
  EXPECT_TRUE(c->witness->contains("query"));
  const ReplayResult replay = replay_witness(*c->witness);
  EXPECT_TRUE(replay.reproduced);
}

TEST(ImplicationTest, RegularImpliesWeaklyRegular) {
  EXPECT_TRUE(check_implication({{"regular"}, "weakly-regular", 4}, {.jobs = 1}).verified());
}

TEST(ImplicationTest, ReflexiveTagsHold) {
  for (const char* tag : {"regular", "scstar-t2", "scstar-closed", "continuous"}) {
    EXPECT_TRUE(check_implication({{tag}, tag, 3}, {.jobs = 1}).verified()) << tag;
  }
}

TEST(ImplicationTest, SubsetAndMapLevels) {
  EXPECT_TRUE(check_implication({{"closed"}, "g-closed", 3}, {.jobs = 1}).verified());
  EXPECT_FALSE(check_implication({{"scstar-closed"}, "g-closed", 2}, {.jobs = 1}).verified());
  EXPECT_TRUE(check_implication({{"closed-map", "continuous"}, "continuous", 2}, {.jobs = 1}).verified());
}

TEST(ImplicationTest, TagErrors) {
  try {
    check_implication({{"regular"}, "closed", 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownTag);
  }
  EXPECT_THROW(check_implication({{"bogus"}, "regular", 2}), Error);
  EXPECT_THROW(check_implication({{"continuous"}, "continuous", 5}), Error);
}

TEST(ReplayTest, TheoremWitnessReproduces) {
  const auto r = verify_theorem("R1.4", {.points = 2, .jobs = 1});
  const ClauseReport* m = find_clause(r, "gscstar-closed => g-closed");
  ASSERT_NE(m, nullptr);
  ASSERT_TRUE(m->witness.has_value());
  const ReplayResult replay = replay_witness(*m->witness);
  EXPECT_TRUE(replay.reproduced);
  EXPECT_EQ(replay.clause, "gscstar-closed => g-closed");
  EXPECT_EQ(replay.detail, (*m->witness)["detail"]);
}

TEST(ReplayTest, EditedWitnessDoesNotReproduce) {
  const auto r = verify_theorem("R1.4", {.points = 2, .jobs = 1});
  Json w = *find_clause(r, "scstar-closed => g-closed")->witness;
  w["instance"]["space"]["opens"] = Json::array({Json::array(), Json::array({"a"}), Json::array({"b"}),
                                                 Json::array({"a", "b"})});
  EXPECT_FALSE(replay_witness(w).reproduced);
}

TEST(ReplayTest, MalformedWitness) {
  EXPECT_THROW(replay_witness(Json::object()), Error);
  Json w = {{"theorem", "R1.4"}, {"clause", "no such clause"}, {"instance", Json::object()}};
  EXPECT_THROW(replay_witness(w), Error);
}

}  // namespace
}  // namespace topolab
