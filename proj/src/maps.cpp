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

#include "topolab/maps.hpp"

namespace topolab {

namespace {

constexpr std::array<std::string_view, kMapPropertyCount> kNames = {
    "continuous",
    "open-map",
    "closed-map",
    "surjective",
    "injective",
    "r-map",
    "completely-continuous",
    "rc-continuous",
    "strongly-scstar-open",
    "strongly-scstar-closed",
    "almost-scstar-irresolute",
    "scstar-closed-map",
    "scstarg-closed-map",
    "gscstar-closed-map",
    "quasi-scstar-closed",
    "scstar-scstarg-closed",
    "scstar-gscstar-closed",
    "almost-gscstar-closed",
    "scstar-gscstar-continuous",
    "scstar-irresolute",
    "scstar-open-map",
    "pre-scstar-open",
};

bool surjective(const MapView& f) { return f.image(f.domain().full()).is_full(); }

bool injective(const MapView& f) {
  Mask seen = 0;
  for (int x = 0; x < f.domain().size(); ++x) {
    const Mask b = Mask{1} << f(x);
    if (seen & b) return false;
    seen |= b;
  }
  return true;
}

bool almost_scstar_irresolute(const MapView& f) {
  const SpaceProfile& x_space = f.domain();
  const SpaceProfile& y_space = f.codomain();
  for (int x = 0; x < x_space.size(); ++x) {
    bool ok = true;
    for_each_subset(y_space.size(), [&](Subset n) {
      if (!ok || !is_scstar_neighborhood(y_space, n, f(x))) return;
      if (!is_scstar_neighborhood(x_space, x_space.scstar_closure(f.preimage(n)), x)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(MapProperty p) { return kNames[static_cast<std::size_t>(p)]; }

std::optional<MapProperty> parse_map_property(std::string_view name) {
  for (int i = 0; i < kMapPropertyCount; ++i) {
    if (kNames[i] == name) return static_cast<MapProperty>(i);
  }
  return std::nullopt;
}

FiniteMap::FiniteMap(std::shared_ptr<const SpaceProfile> domain, std::shared_ptr<const SpaceProfile> codomain,
                     const std::vector<int>& assign)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  const int n = domain_->size();
  if (static_cast<int>(assign.size()) < n) {
    const std::string& label = domain_->space().label(static_cast<int>(assign.size()));
    throw Error(ErrorCode::kMissingAssignment, "no image given for point '" + label + "'");
  }
  if (static_cast<int>(assign.size()) > n) {
    throw Error(ErrorCode::kMalformedDocument, "assignment table longer than the domain");
  }
  for (int x = 0; x < n; ++x) {
    if (assign[x] < 0 || assign[x] >= codomain_->size()) {
      throw Error(ErrorCode::kUnknownCodomainPoint,
                  "image of '" + domain_->space().label(x) + "' is not a codomain point");
    }
    assign_[x] = static_cast<std::uint8_t>(assign[x]);
  }
}

FiniteMap validate_map(std::shared_ptr<const SpaceProfile> domain, std::shared_ptr<const SpaceProfile> codomain,
                       const std::map<std::string, std::string>& table) {
  const Space& x_space = domain->space();
  const Space& y_space = codomain->space();
  for (const auto& [from, to] : table) {
    if (!x_space.index_of(from)) throw Error(ErrorCode::kUnknownLabel, "map names unknown domain point '" + from + "'");
  }
  std::vector<int> assign;
  for (int x = 0; x < x_space.size(); ++x) {
    auto it = table.find(x_space.label(x));
    if (it == table.end()) {
      throw Error(ErrorCode::kMissingAssignment, "no image given for point '" + x_space.label(x) + "'");
    }
    auto y = y_space.index_of(it->second);
    if (!y) throw Error(ErrorCode::kUnknownCodomainPoint, "unknown codomain point '" + it->second + "'");
    assign.push_back(*y);
  }
  return FiniteMap(std::move(domain), std::move(codomain), assign);
}

FiniteMap validate_map(const Space& domain, const Space& codomain, const std::map<std::string, std::string>& table) {
  return validate_map(std::make_shared<const SpaceProfile>(domain), std::make_shared<const SpaceProfile>(codomain),
                      table);
}

MapView compose(const MapView& f, const MapView& g) {
  if (f.codomain().size() != g.domain().size() || !f.codomain().space().same_topology(g.domain().space())) {
    throw Error(ErrorCode::kSpaceMismatch, "cannot compose: codomain of f differs from domain of g");
  }
  MapView::Table table{};
  for (int x = 0; x < f.domain().size(); ++x) table[x] = static_cast<std::uint8_t>(g(f(x)));
  return MapView(f.domain(), g.codomain(), table);
}

Subset image(const MapView& f, Subset a) { return f.image(a); }
Subset preimage(const MapView& f, Subset b) { return f.preimage(b); }

std::optional<Subset> image_violation(const MapView& f, SetClass from, SetClass to) {
  for (Subset a : f.domain().family(from)) {
    if (!f.codomain().has(f.image(a), to)) return a;
  }
  return std::nullopt;
}

std::optional<Subset> preimage_violation(const MapView& f, SetClass from, SetClass to) {
  for (Subset b : f.codomain().family(from)) {
    if (!f.domain().has(f.preimage(b), to)) return b;
  }
  return std::nullopt;
}

bool is_scstar_neighborhood(const SpaceProfile& profile, Subset p, int y) {
  for (Subset o : profile.family(SetClass::kScstarOpen)) {
    if (o.contains(y) && o.is_subset_of(p)) return true;
  }
  return false;
}

bool map_property(const MapView& f, MapProperty p) {
  auto image_keeps = [&](SetClass from, SetClass to) { return !image_violation(f, from, to); };
  auto preimage_keeps = [&](SetClass from, SetClass to) { return !preimage_violation(f, from, to); };
  switch (p) {
    case MapProperty::kContinuous:
      return preimage_keeps(SetClass::kOpen, SetClass::kOpen);
    case MapProperty::kOpenMap:
      return image_keeps(SetClass::kOpen, SetClass::kOpen);
    case MapProperty::kClosedMap:
      return image_keeps(SetClass::kClosed, SetClass::kClosed);
    case MapProperty::kSurjective:
      return surjective(f);
    case MapProperty::kInjective:
      return injective(f);
    case MapProperty::kRMap:
      return preimage_keeps(SetClass::kRegularOpen, SetClass::kRegularOpen);
    case MapProperty::kCompletelyContinuous:
      return preimage_keeps(SetClass::kOpen, SetClass::kRegularOpen);
    case MapProperty::kRcContinuous:
      return preimage_keeps(SetClass::kRegularClosed, SetClass::kRegularClosed);
    case MapProperty::kStronglyScstarOpen:
    case MapProperty::kPreScstarOpen:
      return image_keeps(SetClass::kScstarOpen, SetClass::kScstarOpen);
    case MapProperty::kStronglyScstarClosed:
      return image_keeps(SetClass::kScstarClosed, SetClass::kScstarClosed);
    case MapProperty::kAlmostScstarIrresolute:
      return almost_scstar_irresolute(f);
    case MapProperty::kScstarClosedMap:
      return image_keeps(SetClass::kClosed, SetClass::kScstarClosed);
    case MapProperty::kScstargClosedMap:
      return image_keeps(SetClass::kClosed, SetClass::kScstargClosed);
    case MapProperty::kGscstarClosedMap:
      return image_keeps(SetClass::kClosed, SetClass::kGscstarClosed);
    case MapProperty::kQuasiScstarClosed:
      return image_keeps(SetClass::kScstarClosed, SetClass::kClosed);
    case MapProperty::kScstarScstargClosed:
      return image_keeps(SetClass::kScstarClosed, SetClass::kScstargClosed);
    case MapProperty::kScstarGscstarClosed:
      return image_keeps(SetClass::kScstarClosed, SetClass::kGscstarClosed);
    case MapProperty::kAlmostGscstarClosed:
      return image_keeps(SetClass::kRegularClosed, SetClass::kGscstarClosed);
    case MapProperty::kScstarGscstarContinuous:
      return preimage_keeps(SetClass::kScstarClosed, SetClass::kGscstarClosed);
    case MapProperty::kScstarIrresolute:
      return preimage_keeps(SetClass::kScstarOpen, SetClass::kScstarOpen);
    case MapProperty::kScstarOpenMap:
      return image_keeps(SetClass::kOpen, SetClass::kScstarOpen);
  }
  return false;
}

std::optional<std::pair<Subset, Subset>> envelope_failure(const MapView& f, std::optional<SetClass> j_class,
                                                          SetClass m_class, SetClass n_class) {
  const SpaceProfile& y_space = f.codomain();
  const auto& ms = f.domain().family(m_class);
  const auto& ns = y_space.family(n_class);
  std::optional<std::pair<Subset, Subset>> failure;
  auto check = [&](Subset j) {
    if (failure) return;
    const Subset pre = f.preimage(j);
    for (Subset m : ms) {
      if (!pre.is_subset_of(m)) continue;
      bool found = false;
      for (Subset n : ns) {
        if (j.is_subset_of(n) && f.preimage(n).is_subset_of(m)) {
          found = true;
          break;
        }
      }
      if (!found) {
        failure = std::pair{j, m};
        return;
      }
    }
  };
  if (j_class) {
    for (Subset j : y_space.family(*j_class)) check(j);
  } else {
    for_each_subset(y_space.size(), check);
  }
  return failure;
}

bool closure_image_condition(const MapView& f) {
  for (Subset m : f.domain().family(SetClass::kScstarOpen)) {
    if (!f.image(f.domain().scstar_closure(m)).is_subset_of(f.codomain().scstar_closure(f.image(m)))) return false;
  }
  return true;
}

LemmaSides lemma_3_4_check(const MapView& f) {
  bool right = true;
  const SpaceProfile& x_space = f.domain();
  for (Subset n : f.codomain().family(SetClass::kScstarOpen)) {
    const Subset pre = f.preimage(n);
    if (!pre.is_subset_of(x_space.scstar_interior(x_space.scstar_closure(pre)))) right = false;
  }
  return {map_property(f, MapProperty::kAlmostScstarIrresolute), right};
}

LemmaSides lemma_5_5_check(const MapView& f) {
  return {map_property(f, MapProperty::kAlmostGscstarClosed),
          envelope_condition(f, std::nullopt, SetClass::kRegularOpen, SetClass::kGscstarOpen)};
}

LemmaSides lemma_5_6_check(const MapView& f) {
  return {map_property(f, MapProperty::kAlmostGscstarClosed),
          envelope_condition(f, SetClass::kClosed, SetClass::kRegularOpen, SetClass::kScstarOpen)};
}

nlohmann::ordered_json PropertyVector::to_json() const {
  nlohmann::ordered_json out;
  for (int i = 0; i < kMapPropertyCount; ++i) out[std::string(kNames[i])] = values[i];
  return out;
}

PropertyVector classify_map(const MapView& f) {
  PropertyVector out;
  for (int i = 0; i < kMapPropertyCount; ++i) out.values[i] = map_property(f, static_cast<MapProperty>(i));
  return out;
}

}  // namespace topolab
