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

#ifndef TOPOLAB_SEPARATION_HPP
#define TOPOLAB_SEPARATION_HPP

#include <array>
#include <optional>
#include <string_view>

#include "json.hpp"
#include "topolab/profile.hpp"

namespace topolab {

enum class Axiom {
  kRegular,
  kGRegular,
  kScstarRegular,
  kSoftlyRegular,
  kAlmostRegular,
  kWeaklyRegular,
  kAlphaRegular,
  kStronglyRgRegular,
  kScstarT1,
  kScstarT2,
  kScstarT3,
  kScstarNormal,
  kScstarCompact,
};
inline constexpr int kAxiomCount = 13;

/// Independent characterizations of SC*-regularity. Wire names follow the
/// statement they come from ("def-2.1", "t2.10-ii", ...).
enum class Variant {
  kDefinition,             // disjoint SC*-open sets around F and x
  kShrinkingNeighborhood,  // x in N, SC*-cl(N) inside every open M around x
  kClosedIntersection,     // F equals the meet of SC*-cl(N) over SC*-open N containing F
  kSetShrinking,           // J meets open M => some SC*-open N meets J with SC*-cl(N) inside M
  kSetSeparation,          // nonempty J missing closed F => SC*-open N meets J, W covers F, disjoint
  kSeparatedClosures,      // as the definition, with disjoint SC*-closures
  kMixedSeparation,        // SC*-open around x, gSC*-open around F
  kMixedSetSeparation,     // set version of the above
  kMixedClosedIntersection,
};
inline constexpr int kVariantCount = 9;

std::string_view to_string(Axiom a);
std::string_view to_string(Variant v);
std::optional<Axiom> parse_axiom(std::string_view name);
std::optional<Variant> parse_variant(std::string_view name);

/// Literal evaluation of the quantified definition.
///
/// The regularity family separates "F inside U, x in V" with U, V disjoint,
/// where F ranges over closed (regular, g-, SC*-, alpha-), pi-closed
/// (softly), regular-closed (almost) or rg-closed (strongly rg) sets and U, V
/// over open sets unless the axiom names another class. SC*-T1 asks every
/// singleton to be SC*-closed, SC*-T3 is SC*-regular plus SC*-T1, and
/// SC*-normal separates disjoint closed sets by disjoint SC*-open sets.
/// SC*-compactness holds on every finite space.
bool axiom(const SpaceProfile& profile, Axiom a);
bool scstar_regular_variant(const SpaceProfile& profile, Variant v);

// Alternative formalizations kept next to the primary ones so that their
// equivalence can be monitored.

/// Distinct points are told apart by SC*-open sets in both directions.
bool scstar_t1_pointwise(const SpaceProfile& profile);
/// Closed J inside open I admits SC*-open M with J in M, SC*-cl(M) in I.
bool scstar_normal_shrinking(const SpaceProfile& profile);
/// Classical Hausdorff: distinct points have disjoint open neighbourhoods.
bool classical_t2(const SpaceProfile& profile);
bool is_discrete(const SpaceProfile& profile);
bool is_indiscrete(const SpaceProfile& profile);

/// True when some members U of `around_set` and V of `around_point` are
/// disjoint with `set` inside U and `point` in V.
bool separates(const std::vector<Subset>& around_set, const std::vector<Subset>& around_point, Subset set, int point);

struct AxiomVector {
  std::array<bool, kAxiomCount> axioms{};
  std::array<bool, kVariantCount> variants{};
  bool scstar_t1_pointwise = false;
  bool scstar_normal_shrinking = false;
  bool t2 = false;

  bool operator[](Axiom a) const { return axioms[static_cast<std::size_t>(a)]; }
  bool operator[](Variant v) const { return variants[static_cast<std::size_t>(v)]; }
  nlohmann::ordered_json to_json() const;
  friend bool operator==(const AxiomVector&, const AxiomVector&) = default;
};

AxiomVector classify_space(const SpaceProfile& profile);

}  // namespace topolab

#endif  // TOPOLAB_SEPARATION_HPP
