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

#include "topolab/gen_sets.hpp"

#include "topolab/operators.hpp"
#include "topolab/profile.hpp"

namespace topolab {

namespace {

constexpr std::array<std::string_view, 10> kNames = {
    "scstar-closed", "scstar-open",    "g-closed",     "g-open",         "rg-closed",
    "rg-open",       "gscstar-closed", "gscstar-open", "scstarg-closed", "scstarg-open",
};

bool scstar_open(const Space& s, Subset a) { return is_scstar_closed(s, a.complement()); }

template <typename Guard>
bool hull_within_guarded_supersets(Subset a, Subset hull, Guard&& guard) {
  bool ok = true;
  for_each_superset(a, [&](Subset u) {
    if (ok && guard(u) && !hull.is_subset_of(u)) ok = false;
  });
  return ok;
}

bool closed_test(const Space& s, Subset a, GenClass tag) {
  switch (tag) {
    case GenClass::kScstarClosed:
      return is_scstar_closed(s, a);
    case GenClass::kGClosed:
      return hull_within_guarded_supersets(a, closure(s, a), [&](Subset u) { return s.is_open(u); });
    case GenClass::kRgClosed:
      return hull_within_guarded_supersets(
          a, closure(s, a), [&](Subset u) { return kernel_class(s, u, KernelClass::kRegularOpen); });
    case GenClass::kGscstarClosed:
      return hull_within_guarded_supersets(a, scstar_closure(s, a), [&](Subset u) { return s.is_open(u); });
    case GenClass::kScstargClosed:
      return hull_within_guarded_supersets(a, scstar_closure(s, a), [&](Subset u) { return scstar_open(s, u); });
    default:
      return false;
  }
}

}  // namespace

std::string_view to_string(GenClass tag) { return kNames[static_cast<std::size_t>(tag)]; }

std::optional<GenClass> parse_gen_class(std::string_view name) {
  for (GenClass tag : kAllGenClasses) {
    if (to_string(tag) == name) return tag;
  }
  return std::nullopt;
}

GenClass dual(GenClass tag) {
  const auto i = static_cast<int>(tag);
  return static_cast<GenClass>(i % 2 == 0 ? i + 1 : i - 1);
}

bool is_scstar_closed(const Space& space, Subset a) {
  const Subset hull = semi_closure(space, a);
  return hull_within_guarded_supersets(a, hull,
                                       [&](Subset u) { return kernel_class(space, u, KernelClass::kCstarOpen); });
}

Subset scstar_closure(const Space& space, Subset a) {
  Subset out = space.full();
  for_each_superset(a, [&](Subset b) {
    if (is_scstar_closed(space, b)) out &= b;
  });
  return out;
}

Subset scstar_interior(const Space& space, Subset a) {
  Subset out = space.empty();
  for_each_subset_of(a, [&](Subset b) {
    if (scstar_open(space, b)) out |= b;
  });
  return out;
}

bool generalized_class(const Space& space, Subset a, GenClass tag) {
  const bool open_variant = static_cast<int>(tag) % 2 == 1;
  return open_variant ? closed_test(space, a.complement(), dual(tag)) : closed_test(space, a, tag);
}

std::vector<Subset> scstar_open_family(const SpaceProfile& profile) { return profile.family(SetClass::kScstarOpen); }

std::vector<Subset> scstar_open_family(const Space& space) { return scstar_open_family(SpaceProfile(space)); }

std::vector<LemmaViolation> lemma_1_6_check(const SpaceProfile& p) {
  std::vector<LemmaViolation> out;
  const int n = p.size();
  const auto& scstar_opens = p.family(SetClass::kScstarOpen);
  for_each_subset(n, [&](Subset j) {
    const Subset hull = p.scstar_closure(j);
    for (int x = 0; x < n; ++x) {
      bool every_nbhd_meets = true;
      for (Subset u : scstar_opens) {
        if (u.contains(x) && !u.intersects(j)) every_nbhd_meets = false;
      }
      if (hull.contains(x) != every_nbhd_meets) out.push_back({"1.6(i)", j, Subset::singleton(n, x)});
    }
    if (p.has(j, SetClass::kScstarClosed) != (hull == j)) out.push_back({"1.6(ii)", j, hull});
    for_each_superset(j, [&](Subset i) {
      if (!hull.is_subset_of(p.scstar_closure(i))) out.push_back({"1.6(iii)", j, i});
    });
    if (p.scstar_closure(hull) != hull) out.push_back({"1.6(iv)", j, p.scstar_closure(hull)});
    if (!p.has(hull, SetClass::kScstarClosed)) out.push_back({"1.6(v)", j, hull});
  });
  return out;
}

std::vector<LemmaViolation> lemma_1_7_check(const SpaceProfile& p) {
  std::vector<LemmaViolation> out;
  for_each_subset(p.size(), [&](Subset j) {
    const Subset core = p.scstar_interior(j);
    std::optional<Subset> escaping;
    for (Subset f : p.family(SetClass::kClosed)) {
      if (!escaping && f.is_subset_of(j) && !f.is_subset_of(core)) escaping = f;
    }
    const bool left = p.has(j, SetClass::kGscstarOpen);
    if (left && escaping) out.push_back({"1.7", j, *escaping});
    if (!left && !escaping) out.push_back({"1.7", j, core});
  });
  return out;
}

}  // namespace topolab
