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

#include "topolab/operators.hpp"

namespace topolab {

namespace {

constexpr std::array<std::string_view, 10> kNames = {
    "regular-open", "regular-closed", "semi-open", "semi-closed", "alpha-open",
    "alpha-closed", "cstar-open",     "cstar-closed", "pi-open",  "pi-closed",
};

bool regular_open(const Space& s, Subset a) { return a == interior(s, closure(s, a)); }

bool open_test(const Space& s, Subset a, KernelClass tag) {
  switch (tag) {
    case KernelClass::kRegularOpen:
      return regular_open(s, a);
    case KernelClass::kSemiOpen:
      return a.is_subset_of(closure(s, interior(s, a)));
    case KernelClass::kAlphaOpen:
      return a.is_subset_of(interior(s, closure(s, interior(s, a))));
    case KernelClass::kCstarOpen:
      return interior(s, closure(s, a)).is_subset_of(a) && a.is_subset_of(closure(s, interior(s, a)));
    case KernelClass::kPiOpen: {
      Subset covered = s.empty();
      for_each_subset_of(a, [&](Subset b) {
        if (regular_open(s, b)) covered |= b;
      });
      return covered == a;
    }
    default:
      return false;
  }
}

Subset smallest_containing(const Space& s, Subset a, KernelClass closed_tag) {
  Subset out = s.full();
  for_each_superset(a, [&](Subset b) {
    if (kernel_class(s, b, closed_tag)) out &= b;
  });
  return out;
}

Subset largest_inside(const Space& s, Subset a, KernelClass open_tag) {
  Subset out = s.empty();
  for_each_subset_of(a, [&](Subset b) {
    if (kernel_class(s, b, open_tag)) out |= b;
  });
  return out;
}

}  // namespace

std::string_view to_string(KernelClass tag) { return kNames[static_cast<std::size_t>(tag)]; }

std::optional<KernelClass> parse_kernel_class(std::string_view name) {
  for (KernelClass tag : kAllKernelClasses) {
    if (to_string(tag) == name) return tag;
  }
  return std::nullopt;
}

KernelClass dual(KernelClass tag) {
  const auto i = static_cast<int>(tag);
  return static_cast<KernelClass>(i % 2 == 0 ? i + 1 : i - 1);
}

bool kernel_class(const Space& space, Subset a, KernelClass tag) {
  const bool closed_variant = static_cast<int>(tag) % 2 == 1;
  return closed_variant ? open_test(space, a.complement(), dual(tag)) : open_test(space, a, tag);
}

Subset semi_closure(const Space& space, Subset a) { return smallest_containing(space, a, KernelClass::kSemiClosed); }
Subset semi_interior(const Space& space, Subset a) { return largest_inside(space, a, KernelClass::kSemiOpen); }
Subset cstar_closure(const Space& space, Subset a) { return smallest_containing(space, a, KernelClass::kCstarClosed); }
Subset cstar_interior(const Space& space, Subset a) { return largest_inside(space, a, KernelClass::kCstarOpen); }

}  // namespace topolab
