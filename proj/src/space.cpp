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

#include "topolab/space.hpp"

#include <algorithm>
#include <set>

namespace topolab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadPointCount: return "BadPointCount";
    case ErrorCode::kBadSubset: return "BadSubset";
    case ErrorCode::kMissingEmptyOrFull: return "MissingEmptyOrFull";
    case ErrorCode::kNotUnionClosed: return "NotUnionClosed";
    case ErrorCode::kNotIntersectionClosed: return "NotIntersectionClosed";
    case ErrorCode::kEmptyCarrier: return "EmptyCarrier";
    case ErrorCode::kDuplicatePoint: return "DuplicatePoint";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kMissingAssignment: return "MissingAssignment";
    case ErrorCode::kUnknownCodomainPoint: return "UnknownCodomainPoint";
    case ErrorCode::kSpaceMismatch: return "SpaceMismatch";
    case ErrorCode::kBoundExceeded: return "BoundExceeded";
    case ErrorCode::kUnknownTheorem: return "UnknownTheorem";
    case ErrorCode::kUnknownTag: return "UnknownTag";
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
  }
  return "Unknown";
}

std::optional<int> Space::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back(i < 16 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i));
  }
  return out;
}

namespace {

std::string raw_subset(Subset a, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for_each_point(a, [&](int p) {
    if (!first) out += ",";
    out += p < static_cast<int>(labels.size()) ? labels[p] : std::to_string(p);
    first = false;
  });
  return out + "}";
}

}  // namespace

Space validate_topology(int n, std::vector<Subset> family, std::vector<std::string> labels, std::string name) {
  if (n < 1 || n > kMaxPoints) {
    throw Error(ErrorCode::kBadPointCount,
                "point count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxPoints));
  }
  if (labels.empty()) labels = default_labels(n);
  if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::kBadPointCount,
                "expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  }
  {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw Error(ErrorCode::kDuplicatePoint, "duplicate point label '" + l + "'");
    }
  }
  for (Subset s : family) {
    if (s.ground_size() != n) {
      throw Error(ErrorCode::kBadSubset, "member " + raw_subset(s, labels) + " is not a subset of the " +
                                             std::to_string(n) + "-point ground set");
    }
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  std::vector<bool> table(std::size_t{1} << n, false);
  for (Subset s : family) table[s.bits()] = true;
  if (!table[0] || !table[full_mask(n)]) {
    throw Error(ErrorCode::kMissingEmptyOrFull, "family must contain the empty set and the full set");
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const Subset u = family[i];
      const Subset v = family[j];
      if (!table[(u | v).bits()]) {
        throw Error(ErrorCode::kNotUnionClosed,
                    "union of " + raw_subset(u, labels) + " and " + raw_subset(v, labels) + " is not in the family",
                    {u, v});
      }
      if (!table[(u & v).bits()]) {
        throw Error(ErrorCode::kNotIntersectionClosed,
                    "intersection of " + raw_subset(u, labels) + " and " + raw_subset(v, labels) +
                        " is not in the family",
                    {u, v});
      }
    }
  }

  Space space;
  space.name_ = std::move(name);
  space.labels_ = std::move(labels);
  space.opens_ = std::move(family);
  space.open_table_ = std::move(table);
  return space;
}

Subset closure(const Space& space, Subset a) {
  Subset out = space.full();
  for (Subset u : space.opens()) {
    const Subset closed = u.complement();
    if (a.is_subset_of(closed)) out &= closed;
  }
  return out;
}

Subset interior(const Space& space, Subset a) {
  Subset out = space.empty();
  for (Subset u : space.opens()) {
    if (u.is_subset_of(a)) out |= u;
  }
  return out;
}

Subset min_open(const Space& space, Subset a) {
  Subset out = space.full();
  for (Subset u : space.opens()) {
    if (a.is_subset_of(u)) out &= u;
  }
  return out;
}

Subset restrict_to(Subset a, Subset carrier) {
  Mask out = 0;
  int index = 0;
  for_each_point(carrier, [&](int p) {
    if (a.contains(p)) out |= Mask{1} << index;
    ++index;
  });
  return Subset(out, carrier.count());
}

Space subspace(const Space& space, Subset carrier) {
  if (carrier.is_empty()) throw Error(ErrorCode::kEmptyCarrier, "subspace carrier is empty");
  std::vector<std::string> labels;
  for_each_point(carrier, [&](int p) { labels.push_back(space.label(p)); });
  std::vector<Subset> opens;
  opens.reserve(space.opens().size());
  for (Subset u : space.opens()) opens.push_back(restrict_to(u, carrier));
  return validate_topology(carrier.count(), std::move(opens), std::move(labels), space.name());
}

std::string format_subset(const Space& space, Subset a) {
  std::string out = "{";
  bool first = true;
  for_each_point(a, [&](int p) {
    if (!first) out += ",";
    out += space.label(p);
    first = false;
  });
  return out + "}";
}

}  // namespace topolab
