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
#include "topolab/gen_sets.hpp"
#include "topolab/profile.hpp"

namespace topolab {
namespace {

using testing::example_1_8;
using testing::example_2_9;
using testing::set;

std::vector<Subset> sets(const Space& s, const std::vector<std::string>& members) {
  std::vector<Subset> out;
  for (const auto& m : members) out.push_back(set(s, m));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(GenSetsTest, GenClassNamesRoundTrip) {
  for (int i = 0; i < 10; ++i) {
    const auto g = static_cast<GenClass>(i);
    EXPECT_EQ(parse_gen_class(to_string(g)), g);
    EXPECT_EQ(dual(dual(g)), g);
  }
  EXPECT_EQ(parse_gen_class("gscstar-closed"), GenClass::kGscstarClosed);
}

TEST(GenSetsTest, ExampleListsOfClosedClasses) {
  const Space s = example_1_8();
  const SpaceProfile p(s);
  EXPECT_EQ(p.family(SetClass::kClosed), sets(s, {"", "n", "ln", "mn", "kmn", "lmn", "klmn"}));
  EXPECT_EQ(p.family(SetClass::kGClosed), sets(s, {"", "klmn", "n", "kn", "ln", "mn", "kln", "kmn", "lmn"}));
  EXPECT_EQ(p.family(SetClass::kScstarClosed).size(), 16U);
  EXPECT_EQ(p.family(SetClass::kGscstarClosed).size(), 16U);
  EXPECT_EQ(p.family(SetClass::kScstargClosed).size(), 16U);
}

TEST(GenSetsTest, LiteralFunctionsOnExamples) {
  const Space s = example_1_8();
  EXPECT_TRUE(is_scstar_closed(s, set(s, "k")));
  EXPECT_FALSE(generalized_class(s, set(s, "km"), GenClass::kGClosed));
  EXPECT_TRUE(generalized_class(s, set(s, "kn"), GenClass::kGClosed));

  const Space t = example_2_9();
  EXPECT_EQ(scstar_closure(t, set(t, "l")), set(t, "l"));
  EXPECT_TRUE(generalized_class(t, set(t, "l"), GenClass::kRgClosed));
}

TEST(GenSetsTest, ProfileAgreesWithLiteralFunctions) {
  for (const Space& s : testing::small_spaces(3)) {
    const SpaceProfile p(s);
    for_each_subset(s.size(), [&](Subset a) {
      EXPECT_EQ(p.has(a, SetClass::kScstarClosed), is_scstar_closed(s, a));
      EXPECT_EQ(p.scstar_closure(a), scstar_closure(s, a));
      EXPECT_EQ(p.scstar_interior(a), scstar_interior(s, a));
      for (int i = 0; i < 10; ++i) {
        const auto g = static_cast<GenClass>(i);
        EXPECT_EQ(p.has(a, to_set_class(g)), generalized_class(s, a, g)) << to_string(g);
      }
    });
    EXPECT_EQ(scstar_open_family(p), scstar_open_family(s));
  }
}

// Frozen oracle output: on every space with at most four points the SC*-open
// family is the whole powerset.
TEST(GenSetsTest, EverySubsetIsScstarClosed) {
  for (const Space& s : testing::small_spaces(4)) {
    const SpaceProfile p(s);
    EXPECT_EQ(p.family(SetClass::kScstarClosed).size(), std::size_t{1} << s.size());
  }
}

TEST(GenSetsTest, ClosedSetsAreInEveryGeneralizedClosedClass) {
  for (const Space& s : testing::small_spaces(4)) {
    const SpaceProfile p(s);
    for (Subset f : p.family(SetClass::kClosed)) {
      for (SetClass c : {SetClass::kGClosed, SetClass::kRgClosed, SetClass::kGscstarClosed, SetClass::kScstargClosed,
                         SetClass::kScstarClosed}) {
        EXPECT_TRUE(p.has(f, c));
      }
    }
  }
}

TEST(GenSetsTest, ClosureLemmaHolds) {
  for (const Space& s : testing::small_spaces(4)) {
    const SpaceProfile p(s);
    EXPECT_TRUE(lemma_1_6_check(p).empty());
    EXPECT_TRUE(lemma_1_7_check(p).empty());
  }
}

}  // namespace
}  // namespace topolab
