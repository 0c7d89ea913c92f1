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

#include "topolab/profile.hpp"

namespace topolab {

namespace {

constexpr std::array<std::string_view, kSetClassCount> kNames = {
    "open",           "closed",         "regular-open", "regular-closed", "semi-open",      "semi-closed",
    "alpha-open",     "alpha-closed",   "cstar-open",   "cstar-closed",   "pi-open",        "pi-closed",
    "scstar-open",    "scstar-closed",  "g-open",       "g-closed",       "rg-open",        "rg-closed",
    "gscstar-open",   "gscstar-closed", "scstarg-open", "scstarg-closed",
};

constexpr std::uint32_t bit(SetClass c) { return std::uint32_t{1} << static_cast<int>(c); }

}  // namespace

std::string_view to_string(SetClass c) { return kNames[static_cast<std::size_t>(c)]; }

std::optional<SetClass> parse_set_class(std::string_view name) {
  for (int i = 0; i < kSetClassCount; ++i) {
    if (kNames[i] == name) return static_cast<SetClass>(i);
  }
  return std::nullopt;
}

SetClass dual(SetClass c) {
  const int i = static_cast<int>(c);
  return static_cast<SetClass>(i % 2 == 0 ? i + 1 : i - 1);
}

SetClass to_set_class(KernelClass tag) { return *parse_set_class(to_string(tag)); }
SetClass to_set_class(GenClass tag) { return *parse_set_class(to_string(tag)); }

SpaceProfile::SpaceProfile(Space space) : space_(std::move(space)) {
  const int n = space_.size();
  const Mask count = Mask{1} << n;
  rows_.resize(count);
  auto sub = [n](Mask m) { return Subset(m, n); };
  auto comp = [n](Mask m) { return ~m & full_mask(n); };
  auto inside = [](Mask a, Mask b) { return (a & ~b) == 0; };

  for (Mask m = 0; m < count; ++m) {
    Row& r = rows_[m];
    r.closure = static_cast<std::uint16_t>(topolab::closure(space_, sub(m)).bits());
    r.interior = static_cast<std::uint16_t>(topolab::interior(space_, sub(m)).bits());
    r.min_open = static_cast<std::uint16_t>(topolab::min_open(space_, sub(m)).bits());
  }
  auto cl = [&](Mask m) -> Mask { return rows_[m].closure; };
  auto in = [&](Mask m) -> Mask { return rows_[m].interior; };

  // Open-side kernel classes, then closed variants via complements.
  for (Mask m = 0; m < count; ++m) {
    std::uint32_t& f = rows_[m].classes;
    if (space_.is_open(sub(m))) f |= bit(SetClass::kOpen);
    if (m == in(cl(m))) f |= bit(SetClass::kRegularOpen);
    if (inside(m, cl(in(m)))) f |= bit(SetClass::kSemiOpen);
    if (inside(m, in(cl(in(m))))) f |= bit(SetClass::kAlphaOpen);
    if (inside(in(cl(m)), m) && inside(m, cl(in(m)))) f |= bit(SetClass::kCstarOpen);
  }
  auto flagged = [&](Mask m, SetClass c) { return (rows_[m].classes & bit(c)) != 0; };
  for (Mask m = 0; m < count; ++m) {
    Mask covered = 0;
    for_each_subset_of(sub(m), [&](Subset b) {
      if (flagged(b.bits(), SetClass::kRegularOpen)) covered |= b.bits();
    });
    if (covered == m) rows_[m].classes |= bit(SetClass::kPiOpen);
  }
  auto close_pairs = [&](std::initializer_list<SetClass> open_classes) {
    for (Mask m = 0; m < count; ++m) {
      for (SetClass c : open_classes) {
        if (flagged(comp(m), c)) rows_[m].classes |= bit(dual(c));
      }
    }
  };
  close_pairs({SetClass::kOpen, SetClass::kRegularOpen, SetClass::kSemiOpen, SetClass::kAlphaOpen,
               SetClass::kCstarOpen, SetClass::kPiOpen});

  auto smallest = [&](Mask m, SetClass closed_class) {
    Mask out = full_mask(n);
    for_each_superset(sub(m), [&](Subset b) {
      if (flagged(b.bits(), closed_class)) out &= b.bits();
    });
    return static_cast<std::uint16_t>(out);
  };
  auto largest = [&](Mask m, SetClass open_class) {
    Mask out = 0;
    for_each_subset_of(sub(m), [&](Subset b) {
      if (flagged(b.bits(), open_class)) out |= b.bits();
    });
    return static_cast<std::uint16_t>(out);
  };
  for (Mask m = 0; m < count; ++m) {
    Row& r = rows_[m];
    r.semi_closure = smallest(m, SetClass::kSemiClosed);
    r.semi_interior = largest(m, SetClass::kSemiOpen);
    r.cstar_closure = smallest(m, SetClass::kCstarClosed);
    r.cstar_interior = largest(m, SetClass::kCstarOpen);
  }

  // SC*-closed: s-cl(A) inside every c*-open superset of A.
  for (Mask m = 0; m < count; ++m) {
    const Mask scl = rows_[m].semi_closure;
    bool ok = true;
    for_each_superset(sub(m), [&](Subset u) {
      if (ok && flagged(u.bits(), SetClass::kCstarOpen) && !inside(scl, u.bits())) ok = false;
    });
    if (ok) rows_[m].classes |= bit(SetClass::kScstarClosed);
  }
  for (Mask m = 0; m < count; ++m) {
    if (flagged(comp(m), SetClass::kScstarClosed)) rows_[m].classes |= bit(SetClass::kScstarOpen);
  }
  for (Mask m = 0; m < count; ++m) {
    rows_[m].scstar_closure = smallest(m, SetClass::kScstarClosed);
    rows_[m].scstar_interior = largest(m, SetClass::kScstarOpen);
  }

  // Generalized classes: cl or SC*-cl of A inside every qualifying superset U.
  auto contained_in_all = [&](Mask m, Mask hull, SetClass guard) {
    bool ok = true;
    for_each_superset(sub(m), [&](Subset u) {
      if (ok && flagged(u.bits(), guard) && !inside(hull, u.bits())) ok = false;
    });
    return ok;
  };
  for (Mask m = 0; m < count; ++m) {
    std::uint32_t& f = rows_[m].classes;
    const Mask c = cl(m);
    const Mask sc = rows_[m].scstar_closure;
    if (contained_in_all(m, c, SetClass::kOpen)) f |= bit(SetClass::kGClosed);
    if (contained_in_all(m, c, SetClass::kRegularOpen)) f |= bit(SetClass::kRgClosed);
    if (contained_in_all(m, sc, SetClass::kOpen)) f |= bit(SetClass::kGscstarClosed);
    if (contained_in_all(m, sc, SetClass::kScstarOpen)) f |= bit(SetClass::kScstargClosed);
  }
  for (Mask m = 0; m < count; ++m) {
    for (SetClass c : {SetClass::kGClosed, SetClass::kRgClosed, SetClass::kGscstarClosed, SetClass::kScstargClosed}) {
      if (flagged(comp(m), c)) rows_[m].classes |= bit(dual(c));
    }
  }

  for (Mask m = 0; m < count; ++m) {
    for (int c = 0; c < kSetClassCount; ++c) {
      if (rows_[m].classes & (std::uint32_t{1} << c)) families_[c].push_back(sub(m));
    }
  }
}

}  // namespace topolab
