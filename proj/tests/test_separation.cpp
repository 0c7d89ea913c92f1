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

#include "test_util.hpp"
#include "topolab/separation.hpp"

namespace topolab {
namespace {

using testing::make_space;

struct AxiomRow {
  const char* name;
  Space (*space)();
  // regular, g, SC*, alpha, softly, almost, weakly, strongly rg
  std::array<bool, 8> expected;
};

// Frozen from tests/oracle/brute_force.py.
const AxiomRow kRows[] = {
    {"example-1.8", testing::example_1_8, {false, false, true, false, false, false, false, false}},
    {"example-2.5", testing::example_2_5, {true, true, true, true, true, true, true, false}},
    {"example-2.6", testing::example_2_6, {false, false, true, false, false, false, false, false}},
    {"example-2.7", testing::example_2_7, {false, false, true, false, false, false, false, false}},
    {"example-2.8", testing::example_2_8, {false, false, true, false, true, true, true, false}},
    {"example-2.9", testing::example_2_9, {true, true, true, true, true, true, true, false}},
};

constexpr Axiom kColumns[] = {Axiom::kRegular,       Axiom::kGRegular,      Axiom::kScstarRegular,
                              Axiom::kAlphaRegular,  Axiom::kSoftlyRegular, Axiom::kAlmostRegular,
                              Axiom::kWeaklyRegular, Axiom::kStronglyRgRegular};

TEST(SeparationTest, ExampleAxiomsMatchOracle) {
  for (const AxiomRow& row : kRows) {
    const SpaceProfile p(row.space());
    for (std::size_t i = 0; i < 8; ++i) {
      EXPECT_EQ(axiom(p, kColumns[i]), row.expected[i]) << row.name << " " << to_string(kColumns[i]);
    }
  }
}

TEST(SeparationTest, NamesRoundTrip) {
  for (int i = 0; i < kAxiomCount; ++i) {
    const auto a = static_cast<Axiom>(i);
    EXPECT_EQ(parse_axiom(to_string(a)), a);
  }
  for (int i = 0; i < kVariantCount; ++i) {
    const auto v = static_cast<Variant>(i);
    EXPECT_EQ(parse_variant(to_string(v)), v);
  }
  EXPECT_EQ(parse_variant("t2.10-iii"), Variant::kClosedIntersection);
  EXPECT_EQ(parse_axiom("regularish"), std::nullopt);
}

TEST(SeparationTest, DiscreteSpacesSatisfyEverything) {
  std::vector<Subset> all;
  for_each_subset(3, [&](Subset s) { all.push_back(s); });
  const SpaceProfile p(validate_topology(3, all));
  EXPECT_TRUE(is_discrete(p));
  EXPECT_FALSE(is_indiscrete(p));
  for (int i = 0; i < kAxiomCount; ++i) EXPECT_TRUE(axiom(p, static_cast<Axiom>(i))) << i;
  EXPECT_TRUE(classical_t2(p));
}

TEST(SeparationTest, IndiscreteSpace) {
  const SpaceProfile p(make_space("abc", {"", "abc"}));
  EXPECT_TRUE(is_indiscrete(p));
  EXPECT_TRUE(axiom(p, Axiom::kRegular));
  EXPECT_FALSE(classical_t2(p));
}

TEST(SeparationTest, SierpinskiSpace) {
  const SpaceProfile p(testing::sierpinski());
  EXPECT_FALSE(axiom(p, Axiom::kRegular));
  EXPECT_TRUE(axiom(p, Axiom::kWeaklyRegular));
  EXPECT_TRUE(axiom(p, Axiom::kScstarRegular));
  EXPECT_FALSE(classical_t2(p));
}

TEST(SeparationTest, SeparatesHelper) {
  const Space s = testing::example_2_9();
  const std::vector<Subset>& opens = s.opens();
  EXPECT_TRUE(separates(opens, opens, testing::set(s, "lm"), 0));
  EXPECT_FALSE(separates(opens, opens, testing::set(s, "l"), 2));
}

TEST(SeparationTest, VariantsAgreeWithDefinition) {
  for (const Space& s : testing::small_spaces(4)) {
    const SpaceProfile p(s);
    const bool def = scstar_regular_variant(p, Variant::kDefinition);
    EXPECT_EQ(def, axiom(p, Axiom::kScstarRegular));
    for (int i = 1; i < kVariantCount; ++i) {
      EXPECT_EQ(scstar_regular_variant(p, static_cast<Variant>(i)), def) << to_string(static_cast<Variant>(i));
    }
    EXPECT_EQ(axiom(p, Axiom::kScstarT1), scstar_t1_pointwise(p));
    EXPECT_EQ(axiom(p, Axiom::kScstarNormal), scstar_normal_shrinking(p));
  }
}

TEST(SeparationTest, HierarchyHolds) {
  for (const Space& s : testing::small_spaces(4)) {
    const AxiomVector v = classify_space(SpaceProfile(s));
    if (v[Axiom::kRegular]) {
      EXPECT_TRUE(v[Axiom::kAlphaRegular]);
      EXPECT_TRUE(v[Axiom::kGRegular]);
      EXPECT_TRUE(v[Axiom::kScstarRegular]);
    }
    if (v[Axiom::kSoftlyRegular]) EXPECT_TRUE(v[Axiom::kAlmostRegular]);
    if (v[Axiom::kAlmostRegular]) EXPECT_TRUE(v[Axiom::kWeaklyRegular]);
    if (v[Axiom::kScstarT3]) EXPECT_TRUE(v[Axiom::kScstarT2]);
    EXPECT_TRUE(v[Axiom::kScstarCompact]);
  }
}

TEST(SeparationTest, ClassifyMatchesSinglePredicates) {
  const SpaceProfile p(testing::example_2_8());
  const AxiomVector v = classify_space(p);
  for (int i = 0; i < kAxiomCount; ++i) EXPECT_EQ(v.axioms[i], axiom(p, static_cast<Axiom>(i)));
  const Json j = v.to_json();
  EXPECT_EQ(j["regular"], false);
  EXPECT_EQ(j["variants"]["def-2.1"], true);
}

}  // namespace
}  // namespace topolab
