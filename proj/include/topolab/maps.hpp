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

#ifndef TOPOLAB_MAPS_HPP
#define TOPOLAB_MAPS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "topolab/profile.hpp"

namespace topolab {

enum class MapProperty {
  kContinuous,
  kOpenMap,
  kClosedMap,
  kSurjective,
  kInjective,
  kRMap,
  kCompletelyContinuous,
  kRcContinuous,
  kStronglyScstarOpen,
  kStronglyScstarClosed,
  kAlmostScstarIrresolute,
  kScstarClosedMap,
  kScstargClosedMap,
  kGscstarClosedMap,
  kQuasiScstarClosed,
  kScstarScstargClosed,
  kScstarGscstarClosed,
  kAlmostGscstarClosed,
  kScstarGscstarContinuous,
  kScstarIrresolute,
  kScstarOpenMap,
  kPreScstarOpen,
};
inline constexpr int kMapPropertyCount = 22;

std::string_view to_string(MapProperty p);
std::optional<MapProperty> parse_map_property(std::string_view name);

/// Non-owning map between two profiled spaces. Cheap to copy; the sweeps
/// build millions of these.
class MapView {
 public:
  using Table = std::array<std::uint8_t, kMaxPoints>;

  MapView(const SpaceProfile& domain, const SpaceProfile& codomain, const Table& assign)
      : domain_(&domain), codomain_(&codomain), assign_(assign) {}

  const SpaceProfile& domain() const { return *domain_; }
  const SpaceProfile& codomain() const { return *codomain_; }
  int operator()(int x) const { return assign_[x]; }
  std::span<const std::uint8_t> table() const { return {assign_.data(), static_cast<std::size_t>(domain_->size())}; }

  Subset image(Subset a) const {
    Mask out = 0;
    for_each_point(a, [&](int x) { out |= Mask{1} << assign_[x]; });
    return Subset(out, codomain_->size());
  }
  Subset preimage(Subset b) const {
    Mask out = 0;
    for (int x = 0; x < domain_->size(); ++x) {
      if (b.contains(assign_[x])) out |= Mask{1} << x;
    }
    return Subset(out, domain_->size());
  }

 private:
  const SpaceProfile* domain_;
  const SpaceProfile* codomain_;
  Table assign_;
};

/// Owning map: keeps both profiles alive.
class FiniteMap {
 public:
  /// Throws kMissingAssignment when `assign` is shorter than the domain and
  /// kUnknownCodomainPoint for an out-of-range value.
  FiniteMap(std::shared_ptr<const SpaceProfile> domain, std::shared_ptr<const SpaceProfile> codomain,
            const std::vector<int>& assign);

  MapView view() const { return MapView(*domain_, *codomain_, assign_); }
  operator MapView() const { return view(); }  // NOLINT(google-explicit-constructor)

  const SpaceProfile& domain() const { return *domain_; }
  const SpaceProfile& codomain() const { return *codomain_; }
  const std::shared_ptr<const SpaceProfile>& domain_ptr() const { return domain_; }
  const std::shared_ptr<const SpaceProfile>& codomain_ptr() const { return codomain_; }
  int operator()(int x) const { return assign_[x]; }
  Subset image(Subset a) const { return view().image(a); }
  Subset preimage(Subset b) const { return view().preimage(b); }

 private:
  std::shared_ptr<const SpaceProfile> domain_;
  std::shared_ptr<const SpaceProfile> codomain_;
  MapView::Table assign_{};
};

/// Builds a map from a label table; errors name the offending label.
FiniteMap validate_map(std::shared_ptr<const SpaceProfile> domain, std::shared_ptr<const SpaceProfile> codomain,
                       const std::map<std::string, std::string>& table);
FiniteMap validate_map(const Space& domain, const Space& codomain, const std::map<std::string, std::string>& table);

/// g after f. Throws kSpaceMismatch unless f's codomain and g's domain carry
/// the same topology.
MapView compose(const MapView& f, const MapView& g);

Subset image(const MapView& f, Subset a);
Subset preimage(const MapView& f, Subset b);

/// First member A of `from` (domain) whose image is not in `to` (codomain).
std::optional<Subset> image_violation(const MapView& f, SetClass from, SetClass to);
/// First member B of `from` (codomain) whose preimage is not in `to` (domain).
std::optional<Subset> preimage_violation(const MapView& f, SetClass from, SetClass to);

/// P is an SC*-neighbourhood of y: some SC*-open O has y in O inside P.
bool is_scstar_neighborhood(const SpaceProfile& profile, Subset p, int y);

bool map_property(const MapView& f, MapProperty p);

/**
 * Envelope condition shared by several characterizations: for every J in
 * `j_class` of the codomain (every subset when nullopt) and every M in
 * `m_class` of the domain with f^-1(J) inside M, some N in `n_class` of the
 * codomain has J inside N and f^-1(N) inside M. Returns the first (J, M)
 * without such an N.
 */
std::optional<std::pair<Subset, Subset>> envelope_failure(const MapView& f, std::optional<SetClass> j_class,
                                                          SetClass m_class, SetClass n_class);
inline bool envelope_condition(const MapView& f, std::optional<SetClass> j_class, SetClass m_class,
                               SetClass n_class) {
  return !envelope_failure(f, j_class, m_class, n_class).has_value();
}

/// f(SC*-cl(M)) inside SC*-cl(f(M)) for every SC*-open M of the domain.
bool closure_image_condition(const MapView& f);

struct LemmaSides {
  bool left = false;
  bool right = false;
  friend bool operator==(const LemmaSides&, const LemmaSides&) = default;
};

/// (almost-SC*-irresolute, f^-1(N) inside SC*-int(SC*-cl(f^-1(N))) for every SC*-open N).
LemmaSides lemma_3_4_check(const MapView& f);
/// (almost-gSC*-closed, envelope over regular-open M with gSC*-open N).
LemmaSides lemma_5_5_check(const MapView& f);
/// (almost-gSC*-closed, envelope of closed G over regular-open M with SC*-open N).
LemmaSides lemma_5_6_check(const MapView& f);

struct PropertyVector {
  std::array<bool, kMapPropertyCount> values{};
  bool operator[](MapProperty p) const { return values[static_cast<std::size_t>(p)]; }
  nlohmann::ordered_json to_json() const;
  friend bool operator==(const PropertyVector&, const PropertyVector&) = default;
};

PropertyVector classify_map(const MapView& f);

}  // namespace topolab

#endif  // TOPOLAB_MAPS_HPP
