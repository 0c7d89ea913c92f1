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

#ifndef TOPOLAB_ENUMERATE_HPP
#define TOPOLAB_ENUMERATE_HPP

#include <compare>
#include <memory>
#include <span>
#include <vector>

#include "topolab/maps.hpp"
#include "topolab/profile.hpp"
#include "topolab/space.hpp"

namespace topolab {

enum class EnumerationRoute {
  kFamilyFilter,  // every family of subsets, kept when it is a topology (n <= 4)
  kPreorder,      // every reflexive-transitive relation, opens = up-sets (n <= 5)
};

inline constexpr int kMaxEnumerationPoints = 5;

/**
 * All topologies on n labeled points ("a", "b", ...), sorted by their opens
 * encoding. With `up_to_homeo`, one representative per homeomorphism class:
 * the relabeling whose encoding is canonical_form(), sorted by that form.
 * Throws kBoundExceeded outside 1..5, or outside 1..4 for kFamilyFilter.
 */
std::vector<Space> enumerate_topologies(int n, bool up_to_homeo = false,
                                        EnumerationRoute route = EnumerationRoute::kPreorder);

struct CanonicalForm {
  int points = 0;
  std::vector<Mask> opens;  // sorted ascending
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Lexicographically least sorted opens encoding over all relabelings.
/// Equal forms iff homeomorphic. Throws kBoundExceeded above 8 points.
CanonicalForm canonical_form(const Space& space);

/// Relabels point i as point perm[i]; labels move with their points.
Space permute(const Space& space, std::span<const int> perm);

/// The space whose opens are exactly the form's encoding, default labels.
Space space_from_form(const CanonicalForm& form);

/// All total assignments passing every filter, in lexicographic order of
/// (f(0), f(1), ...). Both spaces must have at most 4 points.
std::vector<FiniteMap> enumerate_maps(const std::shared_ptr<const SpaceProfile>& domain,
                                      const std::shared_ptr<const SpaceProfile>& codomain,
                                      std::span<const MapProperty> filters = {});

/// Profiles for every labeled topology on 1..max_points points, in
/// enumeration order (by point count, then encoding).
std::vector<std::shared_ptr<const SpaceProfile>> profile_universe(int max_points);

}  // namespace topolab

#endif  // TOPOLAB_ENUMERATE_HPP
