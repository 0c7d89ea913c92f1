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

#include <algorithm>
#include <numeric>
#include <set>

#include "test_util.hpp"
#include "topolab/enumerate.hpp"

namespace topolab {
namespace {

using testing::make_space;

std::set<std::vector<Subset>> encodings(const std::vector<Space>& spaces) {
  std::set<std::vector<Subset>> out;
  for (const Space& s : spaces) out.insert(s.opens());
  return out;
}

TEST(EnumerateTest, LabeledCounts) {
  // 1, 4, 29, 355 from the naive family filter in tests/oracle/brute_force.py.
  const std::size_t expected[] = {1, 4, 29, 355};
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(enumerate_topologies(n, false, EnumerationRoute::kPreorder).size(), expected[n - 1]);
    EXPECT_EQ(enumerate_topologies(n, false, EnumerationRoute::kFamilyFilter).size(), expected[n - 1]);
  }
  EXPECT_EQ(enumerate_topologies(5).size(), 6942U);
}

TEST(EnumerateTest, RoutesProduceIdenticalSpaces) {
  for (int n = 1; n <= 4; ++n) {
    const auto a = enumerate_topologies(n, false, EnumerationRoute::kPreorder);
    const auto b = enumerate_topologies(n, false, EnumerationRoute::kFamilyFilter);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
    EXPECT_EQ(encodings(a).size(), a.size());
  }
}

TEST(EnumerateTest, BoundsAreEnforced) {
  EXPECT_THROW(enumerate_topologies(0), Error);
  EXPECT_THROW(enumerate_topologies(6), Error);
  EXPECT_THROW(enumerate_topologies(5, false, EnumerationRoute::kFamilyFilter), Error);
  try {
    enumerate_topologies(6);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBoundExceeded);
  }
}

TEST(EnumerateTest, CanonicalFormExamples) {
  const Space d1 = make_space("ab", {"", "a", "b", "ab"});
  const Space d2 = make_space("ba", {"", "a", "b", "ab"});
  EXPECT_EQ(canonical_form(d1), canonical_form(d2));
  const Space s1 = make_space("ab", {"", "a", "ab"});
  const Space s2 = make_space("ab", {"", "b", "ab"});
  EXPECT_EQ(canonical_form(s1), canonical_form(s2));
  EXPECT_NE(canonical_form(s1), canonical_form(d1));
}

// Independent homeomorphism test: some permutation maps one family onto the
// other.
bool homeomorphic(const Space& a, const Space& b) {
  if (a.size() != b.size() || a.opens().size() != b.opens().size()) return false;
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (permute(a, perm).opens() == b.opens()) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

TEST(EnumerateTest, HomeomorphismClassCounts) {
  const std::size_t expected[] = {1, 3, 9, 33};
  for (int n = 1; n <= 4; ++n) {
    const auto spaces = enumerate_topologies(n);
    std::vector<Space> reps;
    for (const Space& s : spaces) {
      if (std::none_of(reps.begin(), reps.end(), [&](const Space& r) { return homeomorphic(r, s); })) {
        reps.push_back(s);
      }
    }
    EXPECT_EQ(reps.size(), expected[n - 1]);
    EXPECT_EQ(enumerate_topologies(n, true).size(), reps.size());
  }
  EXPECT_EQ(enumerate_topologies(5, true).size(), 139U);
}

TEST(EnumerateTest, CanonicalFormIsRelabelingInvariant) {
  for (const Space& s : enumerate_topologies(4)) {
    const CanonicalForm form = canonical_form(s);
    std::vector<int> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      EXPECT_EQ(canonical_form(permute(s, perm)), form);
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(canonical_form(space_from_form(form)), form);
  }
}

TEST(EnumerateTest, RepresentativesCarryTheirCanonicalEncoding) {
  for (const Space& s : enumerate_topologies(3, true)) {
    const CanonicalForm form = canonical_form(s);
    std::vector<Mask> opens;
    for (Subset u : s.opens()) opens.push_back(u.bits());
    EXPECT_EQ(opens, form.opens);
  }
}

TEST(EnumerateTest, PermuteMovesLabels) {
  const Space s = make_space("ab", {"", "a", "ab"});
  const int swap[] = {1, 0};
  const Space t = permute(s, swap);
  EXPECT_EQ(t.label(0), "b");
  EXPECT_TRUE(t.is_open(Subset(0b10, 2)));
}

TEST(EnumerateTest, ProfileUniverseOrder) {
  const auto universe = profile_universe(3);
  ASSERT_EQ(universe.size(), 34U);
  EXPECT_EQ(universe.front()->size(), 1);
  EXPECT_EQ(universe.back()->size(), 3);
}

}  // namespace
}  // namespace topolab
