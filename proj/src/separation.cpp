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

#include "topolab/separation.hpp"

namespace topolab {

namespace {

constexpr std::array<std::string_view, kAxiomCount> kAxiomNames = {
    "regular",       "g-regular", "scstar-regular", "softly-regular", "almost-regular", "weakly-regular",
    "alpha-regular", "strongly-rg-regular", "scstar-t1", "scstar-t2", "scstar-t3", "scstar-normal",
    "scstar-compact",
};

constexpr std::array<std::string_view, kVariantCount> kVariantNames = {
    "def-2.1", "t2.10-ii", "t2.10-iii", "t2.10-iv", "t2.10-v", "t2.11", "t4.12-ii", "t4.12-iii", "t4.12-iv",
};

// For every F in `sets` and every x outside F, F and x are separated.
bool point_set_regular(const SpaceProfile& p, SetClass set_class, SetClass open_class) {
  const auto& opens = p.family(open_class);
  for (Subset f : p.family(set_class)) {
    for (int x = 0; x < p.size(); ++x) {
      if (!f.contains(x) && !separates(opens, opens, f, x)) return false;
    }
  }
  return true;
}

bool weakly_regular(const SpaceProfile& p) {
  for (Subset u : p.family(SetClass::kRegularOpen)) {
    for (int x = 0; x < p.size(); ++x) {
      if (!u.contains(x)) continue;
      bool found = false;
      for (Subset v : p.family(SetClass::kOpen)) {
        if (v.contains(x) && p.closure(v).is_subset_of(u)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool scstar_t1(const SpaceProfile& p) {
  for (int x = 0; x < p.size(); ++x) {
    if (!p.has(Subset::singleton(p.size(), x), SetClass::kScstarClosed)) return false;
  }
  return true;
}

bool pairwise_hausdorff(const SpaceProfile& p, SetClass open_class) {
  const auto& opens = p.family(open_class);
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!separates(opens, opens, Subset::singleton(n, y), x)) return false;
    }
  }
  return true;
}

bool scstar_normal(const SpaceProfile& p) {
  const auto& closed = p.family(SetClass::kClosed);
  const auto& opens = p.family(SetClass::kScstarOpen);
  for (Subset a : closed) {
    for (Subset b : closed) {
      if (a.intersects(b)) continue;
      bool found = false;
      for (Subset u : opens) {
        if (!a.is_subset_of(u)) continue;
        for (Subset v : opens) {
          if (b.is_subset_of(v) && !u.intersects(v)) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

Subset meet_of_closures_over(const SpaceProfile& p, Subset f) {
  Subset meet = p.full();
  for (Subset n : p.family(SetClass::kScstarOpen)) {
    if (f.is_subset_of(n)) meet &= p.scstar_closure(n);
  }
  return meet;
}

bool closed_intersection(const SpaceProfile& p) {
  for (Subset f : p.family(SetClass::kClosed)) {
    if (meet_of_closures_over(p, f) != f) return false;
  }
  return true;
}

bool shrinking_neighborhood(const SpaceProfile& p) {
  const auto& scstar_opens = p.family(SetClass::kScstarOpen);
  for (Subset m : p.family(SetClass::kOpen)) {
    for (int x = 0; x < p.size(); ++x) {
      if (!m.contains(x)) continue;
      bool found = false;
      for (Subset nb : scstar_opens) {
        if (nb.contains(x) && p.scstar_closure(nb).is_subset_of(m)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool set_shrinking(const SpaceProfile& p) {
  const auto& scstar_opens = p.family(SetClass::kScstarOpen);
  bool ok = true;
  for_each_subset(p.size(), [&](Subset j) {
    if (!ok) return;
    for (Subset m : p.family(SetClass::kOpen)) {
      if (!j.intersects(m)) continue;
      bool found = false;
      for (Subset nb : scstar_opens) {
        if (nb.intersects(j) && p.scstar_closure(nb).is_subset_of(m)) {
          found = true;
          break;
        }
      }
      if (!found) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

// Nonempty J disjoint from closed F: some N in `around_set_j` meets J, some W
// in `around_f` covers F, and N, W are disjoint.
bool set_separation(const SpaceProfile& p, SetClass j_class, SetClass f_class) {
  const auto& js = p.family(j_class);
  const auto& fs = p.family(f_class);
  bool ok = true;
  for_each_subset(p.size(), [&](Subset j) {
    if (!ok || j.is_empty()) return;
    for (Subset f : p.family(SetClass::kClosed)) {
      if (j.intersects(f)) continue;
      bool found = false;
      for (Subset nb : js) {
        if (!nb.intersects(j)) continue;
        for (Subset w : fs) {
          if (f.is_subset_of(w) && !nb.intersects(w)) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

bool separated_closures(const SpaceProfile& p) {
  const auto& opens = p.family(SetClass::kScstarOpen);
  for (Subset f : p.family(SetClass::kClosed)) {
    for (int x = 0; x < p.size(); ++x) {
      if (f.contains(x)) continue;
      bool found = false;
      for (Subset m : opens) {
        if (!m.contains(x)) continue;
        const Subset cm = p.scstar_closure(m);
        for (Subset nb : opens) {
          if (f.is_subset_of(nb) && !cm.intersects(p.scstar_closure(nb))) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

bool mixed_separation(const SpaceProfile& p) {
  const auto& around_point = p.family(SetClass::kScstarOpen);
  const auto& around_set = p.family(SetClass::kGscstarOpen);
  for (Subset f : p.family(SetClass::kClosed)) {
    for (int x = 0; x < p.size(); ++x) {
      if (!f.contains(x) && !separates(around_set, around_point, f, x)) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(Axiom a) { return kAxiomNames[static_cast<std::size_t>(a)]; }
std::string_view to_string(Variant v) { return kVariantNames[static_cast<std::size_t>(v)]; }

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (int i = 0; i < kAxiomCount; ++i) {
    if (kAxiomNames[i] == name) return static_cast<Axiom>(i);
  }
  return std::nullopt;
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (int i = 0; i < kVariantCount; ++i) {
    if (kVariantNames[i] == name) return static_cast<Variant>(i);
  }
  return std::nullopt;
}

bool separates(const std::vector<Subset>& around_set, const std::vector<Subset>& around_point, Subset set,
               int point) {
  for (Subset u : around_set) {
    if (!set.is_subset_of(u) || u.contains(point)) continue;
    for (Subset v : around_point) {
      if (v.contains(point) && !u.intersects(v)) return true;
    }
  }
  return false;
}

bool axiom(const SpaceProfile& p, Axiom a) {
  switch (a) {
    case Axiom::kRegular:
      return point_set_regular(p, SetClass::kClosed, SetClass::kOpen);
    case Axiom::kGRegular:
      return point_set_regular(p, SetClass::kClosed, SetClass::kGOpen);
    case Axiom::kScstarRegular:
      return point_set_regular(p, SetClass::kClosed, SetClass::kScstarOpen);
    case Axiom::kSoftlyRegular:
      return point_set_regular(p, SetClass::kPiClosed, SetClass::kOpen);
    case Axiom::kAlmostRegular:
      return point_set_regular(p, SetClass::kRegularClosed, SetClass::kOpen);
    case Axiom::kWeaklyRegular:
      return weakly_regular(p);
    case Axiom::kAlphaRegular:
      return point_set_regular(p, SetClass::kClosed, SetClass::kAlphaOpen);
    case Axiom::kStronglyRgRegular:
      return point_set_regular(p, SetClass::kRgClosed, SetClass::kOpen);
    case Axiom::kScstarT1:
      return scstar_t1(p);
    case Axiom::kScstarT2:
      return pairwise_hausdorff(p, SetClass::kScstarOpen);
    case Axiom::kScstarT3:
      return axiom(p, Axiom::kScstarRegular) && scstar_t1(p);
    case Axiom::kScstarNormal:
      return scstar_normal(p);
    case Axiom::kScstarCompact:
      // Every cover of a finite space is finite.
      return true;
  }
  return false;
}

bool scstar_regular_variant(const SpaceProfile& p, Variant v) {
  switch (v) {
    case Variant::kDefinition:
      return axiom(p, Axiom::kScstarRegular);
    case Variant::kShrinkingNeighborhood:
      return shrinking_neighborhood(p);
    case Variant::kClosedIntersection:
    case Variant::kMixedClosedIntersection:
      return closed_intersection(p);
    case Variant::kSetShrinking:
      return set_shrinking(p);
    case Variant::kSetSeparation:
      return set_separation(p, SetClass::kScstarOpen, SetClass::kScstarOpen);
    case Variant::kSeparatedClosures:
      return separated_closures(p);
    case Variant::kMixedSeparation:
      return mixed_separation(p);
    case Variant::kMixedSetSeparation:
      return set_separation(p, SetClass::kScstarOpen, SetClass::kGscstarOpen);
  }
  return false;
}

bool scstar_t1_pointwise(const SpaceProfile& p) {
  const int n = p.size();
  const auto& opens = p.family(SetClass::kScstarOpen);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      bool found = false;
      for (Subset u : opens) {
        if (u.contains(x) && !u.contains(y)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool scstar_normal_shrinking(const SpaceProfile& p) {
  const auto& scstar_opens = p.family(SetClass::kScstarOpen);
  for (Subset j : p.family(SetClass::kClosed)) {
    for (Subset i : p.family(SetClass::kOpen)) {
      if (!j.is_subset_of(i)) continue;
      bool found = false;
      for (Subset m : scstar_opens) {
        if (j.is_subset_of(m) && p.scstar_closure(m).is_subset_of(i)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool classical_t2(const SpaceProfile& p) { return pairwise_hausdorff(p, SetClass::kOpen); }

bool is_discrete(const SpaceProfile& p) {
  return p.family(SetClass::kOpen).size() == (std::size_t{1} << p.size());
}

bool is_indiscrete(const SpaceProfile& p) { return p.family(SetClass::kOpen).size() <= 2; }

nlohmann::ordered_json AxiomVector::to_json() const {
  nlohmann::ordered_json out;
  for (int i = 0; i < kAxiomCount; ++i) out[std::string(kAxiomNames[i])] = axioms[i];
  nlohmann::ordered_json variant_json;
  for (int i = 0; i < kVariantCount; ++i) variant_json[std::string(kVariantNames[i])] = variants[i];
  out["variants"] = variant_json;
  out["scstar-t1-pointwise"] = scstar_t1_pointwise;
  out["scstar-normal-shrinking"] = scstar_normal_shrinking;
  out["t2"] = t2;
  return out;
}

AxiomVector classify_space(const SpaceProfile& p) {
  AxiomVector out;
  for (int i = 0; i < kAxiomCount; ++i) out.axioms[i] = axiom(p, static_cast<Axiom>(i));
  for (int i = 0; i < kVariantCount; ++i) out.variants[i] = scstar_regular_variant(p, static_cast<Variant>(i));
  out.scstar_t1_pointwise = scstar_t1_pointwise(p);
  out.scstar_normal_shrinking = scstar_normal_shrinking(p);
  out.t2 = classical_t2(p);
  return out;
}

}  // namespace topolab
