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

#ifndef TOPOLAB_PROFILE_HPP
#define TOPOLAB_PROFILE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "topolab/gen_sets.hpp"
#include "topolab/operators.hpp"
#include "topolab/space.hpp"

namespace topolab {

// Every set class the engine knows, in open/closed dual pairs (even = open).
enum class SetClass : std::uint8_t {
  kOpen,
  kClosed,
  kRegularOpen,
  kRegularClosed,
  kSemiOpen,
  kSemiClosed,
  kAlphaOpen,
  kAlphaClosed,
  kCstarOpen,
  kCstarClosed,
  kPiOpen,
  kPiClosed,
  kScstarOpen,
  kScstarClosed,
  kGOpen,
  kGClosed,
  kRgOpen,
  kRgClosed,
  kGscstarOpen,
  kGscstarClosed,
  kScstargOpen,
  kScstargClosed,
};

inline constexpr int kSetClassCount = 22;

std::string_view to_string(SetClass c);
std::optional<SetClass> parse_set_class(std::string_view name);
SetClass dual(SetClass c);
SetClass to_set_class(KernelClass tag);
SetClass to_set_class(GenClass tag);

/// One boolean per SetClass for a single subset.
class ClassVector {
 public:
  constexpr ClassVector() = default;
  constexpr explicit ClassVector(std::uint32_t bits) : bits_(bits) {}
  constexpr bool operator[](SetClass c) const { return (bits_ >> static_cast<int>(c)) & 1U; }
  constexpr void set(SetClass c) { bits_ |= std::uint32_t{1} << static_cast<int>(c); }
  constexpr std::uint32_t bits() const { return bits_; }
  friend constexpr bool operator==(ClassVector, ClassVector) = default;

 private:
  std::uint32_t bits_ = 0;
};

/**
 * Every operator and set class tabulated over the full powerset of one space.
 *
 * Built once per space in dependency order (closure/interior, kernel classes,
 * semi and c* closures, SC*-closedness, SC*-closure, generalized classes), so
 * the separation axioms, map properties and sweeps run on table lookups. The
 * tables are cross-checked against the literal single-subset functions in
 * operators.hpp and gen_sets.hpp by the test suite.
 */
class SpaceProfile {
 public:
  explicit SpaceProfile(Space space);

  const Space& space() const { return space_; }
  int size() const { return space_.size(); }
  Subset empty() const { return space_.empty(); }
  Subset full() const { return space_.full(); }

  bool has(Subset a, SetClass c) const { return classes(a)[c]; }
  ClassVector classes(Subset a) const { return ClassVector(rows_[a.bits()].classes); }

  Subset closure(Subset a) const { return at(a, &Row::closure); }
  Subset interior(Subset a) const { return at(a, &Row::interior); }
  Subset min_open(Subset a) const { return at(a, &Row::min_open); }
  Subset semi_closure(Subset a) const { return at(a, &Row::semi_closure); }
  Subset semi_interior(Subset a) const { return at(a, &Row::semi_interior); }
  Subset cstar_closure(Subset a) const { return at(a, &Row::cstar_closure); }
  Subset cstar_interior(Subset a) const { return at(a, &Row::cstar_interior); }
  Subset scstar_closure(Subset a) const { return at(a, &Row::scstar_closure); }
  Subset scstar_interior(Subset a) const { return at(a, &Row::scstar_interior); }

  /// Members of the class in canonical order.
  const std::vector<Subset>& family(SetClass c) const { return families_[static_cast<std::size_t>(c)]; }

 private:
  struct Row {
    std::uint32_t classes = 0;
    std::uint16_t closure = 0, interior = 0, min_open = 0;
    std::uint16_t semi_closure = 0, semi_interior = 0;
    std::uint16_t cstar_closure = 0, cstar_interior = 0;
    std::uint16_t scstar_closure = 0, scstar_interior = 0;
  };

  Subset at(Subset a, std::uint16_t Row::*field) const { return Subset(rows_[a.bits()].*field, size()); }

  Space space_;
  std::vector<Row> rows_;
  std::array<std::vector<Subset>, kSetClassCount> families_;
};

}  // namespace topolab

#endif  // TOPOLAB_PROFILE_HPP
