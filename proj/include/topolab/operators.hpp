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

#ifndef TOPOLAB_OPERATORS_HPP
#define TOPOLAB_OPERATORS_HPP

#include <array>
#include <optional>
#include <string_view>

#include "topolab/space.hpp"

namespace topolab {

// Classical set classes derived from closure and interior. Every closed
// variant is the complement-dual of the preceding open variant.
enum class KernelClass {
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
};

inline constexpr std::array kAllKernelClasses = {
    KernelClass::kRegularOpen, KernelClass::kRegularClosed, KernelClass::kSemiOpen, KernelClass::kSemiClosed,
    KernelClass::kAlphaOpen,   KernelClass::kAlphaClosed,   KernelClass::kCstarOpen, KernelClass::kCstarClosed,
    KernelClass::kPiOpen,      KernelClass::kPiClosed,
};

std::string_view to_string(KernelClass tag);
std::optional<KernelClass> parse_kernel_class(std::string_view name);
KernelClass dual(KernelClass tag);

/// Membership test evaluated literally from the defining inclusion; closed
/// variants test the complement. Pi-open means "union of regular-open sets".
bool kernel_class(const Space& space, Subset a, KernelClass tag);

// The closures below are literal intersections of every member of the class
// containing `a` (the interiors literal unions). None of them assumes the
// class is closed under intersection; SpaceProfile reports when it is not.

Subset semi_closure(const Space& space, Subset a);
Subset semi_interior(const Space& space, Subset a);
Subset cstar_closure(const Space& space, Subset a);
Subset cstar_interior(const Space& space, Subset a);

}  // namespace topolab

#endif  // TOPOLAB_OPERATORS_HPP
