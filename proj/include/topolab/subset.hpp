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

#ifndef TOPOLAB_SUBSET_HPP
#define TOPOLAB_SUBSET_HPP

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>

namespace topolab {

/// Maximum number of points in a ground set. Every subset fits one word and
/// the full powerset (at most 65536 members) can be iterated.
inline constexpr int kMaxPoints = 16;

/// Raw index-set encoding: bit i set iff point i is a member.
using Mask = std::uint32_t;

constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

/**
 * A subset of the ground set {0, ..., n-1}.
 *
 * Carries its point count so that complement() is self-contained. Binary
 * operations require both operands to live over the same ground set.
 */
class Subset {
 public:
  constexpr Subset() = default;
  constexpr Subset(Mask bits, int n) : bits_(static_cast<std::uint16_t>(bits)), n_(static_cast<std::uint8_t>(n)) {
    assert(n >= 0 && n <= kMaxPoints);
    assert((bits & ~full_mask(n)) == 0);
  }

  static constexpr Subset empty(int n) { return Subset(0, n); }
  static constexpr Subset full(int n) { return Subset(full_mask(n), n); }
  static constexpr Subset singleton(int n, int point) { return Subset(Mask{1} << point, n); }

  constexpr Mask bits() const { return bits_; }
  /// Point count of the ground set (not the cardinality).
  constexpr int ground_size() const { return n_; }
  constexpr int count() const { return std::popcount(static_cast<unsigned>(bits_)); }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr bool is_full() const { return bits_ == full_mask(n_); }

  constexpr bool contains(int point) const { return (bits_ >> point) & 1U; }
  constexpr bool is_subset_of(Subset other) const {
    assert(n_ == other.n_);
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(Subset other) const {
    assert(n_ == other.n_);
    return (bits_ & other.bits_) != 0;
  }

  constexpr Subset complement() const { return Subset(~Mask{bits_} & full_mask(n_), n_); }

  constexpr Subset with(int point) const { return Subset(bits_ | (Mask{1} << point), n_); }
  constexpr Subset without(int point) const { return Subset(bits_ & ~(Mask{1} << point), n_); }

  friend constexpr Subset operator|(Subset a, Subset b) {
    assert(a.n_ == b.n_);
    return Subset(Mask{a.bits_} | b.bits_, a.n_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    assert(a.n_ == b.n_);
    return Subset(Mask{a.bits_} & b.bits_, a.n_);
  }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    assert(a.n_ == b.n_);
    return Subset(Mask{a.bits_} & ~Mask{b.bits_}, a.n_);
  }
  Subset& operator|=(Subset o) { return *this = *this | o; }
  Subset& operator&=(Subset o) { return *this = *this & o; }

  // Orders by ground size, then by the integer value of the encoding.
  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  std::uint16_t bits_ = 0;
  std::uint8_t n_ = 0;
};

/// Calls fn(point) for every member of `s` in ascending index order.
template <typename Fn>
constexpr void for_each_point(Subset s, Fn&& fn) {
  for (Mask m = s.bits(); m != 0; m &= m - 1) fn(std::countr_zero(m));
}

/// Calls fn(Subset) for every subset of the n-point ground set, in
/// ascending encoding order.
template <typename Fn>
constexpr void for_each_subset(int n, Fn&& fn) {
  const Mask end = Mask{1} << n;
  for (Mask m = 0; m < end; ++m) fn(Subset(m, n));
}

/// Calls fn(Subset) for every superset of `s` (including `s` itself).
template <typename Fn>
constexpr void for_each_superset(Subset s, Fn&& fn) {
  const Mask free = s.complement().bits();
  Mask sub = free;
  while (true) {
    fn(Subset(s.bits() | sub, s.ground_size()));
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
}

/// Calls fn(Subset) for every subset of `s` (including the empty set).
template <typename Fn>
constexpr void for_each_subset_of(Subset s, Fn&& fn) {
  Mask sub = s.bits();
  while (true) {
    fn(Subset(sub, s.ground_size()));
    if (sub == 0) break;
    sub = (sub - 1) & s.bits();
  }
}

}  // namespace topolab

#endif  // TOPOLAB_SUBSET_HPP
