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

#ifndef TOPOLAB_SPACE_HPP
#define TOPOLAB_SPACE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/error.hpp"
#include "topolab/subset.hpp"

namespace topolab {

/**
 * A validated finite topology.
 *
 * Immutable once built. `opens()` is sorted ascending by encoding and
 * duplicate-free, so two spaces over the same labels compare equal exactly
 * when their topologies coincide. Labels are presentation only; every
 * computation works on point indices.
 */
class Space {
 public:
  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int point) const { return labels_[point]; }
  const std::vector<Subset>& opens() const { return opens_; }

  Subset empty() const { return Subset::empty(size()); }
  Subset full() const { return Subset::full(size()); }

  bool is_open(Subset a) const { return open_table_[a.bits()]; }
  bool is_closed(Subset a) const { return open_table_[a.complement().bits()]; }

  /// Index of `label`, or nullopt if no point carries it.
  std::optional<int> index_of(std::string_view label) const;

  /// Same point count and same opens; names and labels are ignored.
  bool same_topology(const Space& other) const { return opens_ == other.opens_; }

  friend bool operator==(const Space& a, const Space& b) {
    return a.opens_ == b.opens_ && a.labels_ == b.labels_ && a.name_ == b.name_;
  }

 private:
  friend Space validate_topology(int, std::vector<Subset>, std::vector<std::string>, std::string);

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Subset> opens_;
  std::vector<bool> open_table_;
};

/// Default labels for an n-point ground set: "a", "b", ... (then "p16", ...).
std::vector<std::string> default_labels(int n);

/**
 * Builds a Space from a candidate family of open sets.
 *
 * Throws Error with kMissingEmptyOrFull, kNotUnionClosed or
 * kNotIntersectionClosed (witness: the violating pair, first in canonical
 * order), or kBadPointCount / kBadSubset / kDuplicatePoint for malformed
 * input. Empty `labels` selects default_labels(n).
 */
Space validate_topology(int n, std::vector<Subset> family, std::vector<std::string> labels = {},
                        std::string name = {});

/// Smallest closed superset, by intersecting the closed supersets.
Subset closure(const Space& space, Subset a);
/// Largest open subset.
Subset interior(const Space& space, Subset a);
/// Smallest open superset; exists because finite topologies are closed under
/// arbitrary intersection.
Subset min_open(const Space& space, Subset a);

/// Subspace on the points of `carrier`, reindexed in ascending order and
/// keeping their labels. Throws kEmptyCarrier for an empty carrier.
Space subspace(const Space& space, Subset carrier);

/// Re-expresses `a` (a subset of the carrier's ambient space) over the
/// carrier's own indices.
Subset restrict_to(Subset a, Subset carrier);

/// Formats a subset as "{k,m}" using the space labels.
std::string format_subset(const Space& space, Subset a);

}  // namespace topolab

#endif  // TOPOLAB_SPACE_HPP
