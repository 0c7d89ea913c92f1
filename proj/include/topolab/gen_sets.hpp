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

#ifndef TOPOLAB_GEN_SETS_HPP
#define TOPOLAB_GEN_SETS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/space.hpp"

namespace topolab {

class SpaceProfile;

enum class GenClass {
  kScstarClosed,
  kScstarOpen,
  kGClosed,
  kGOpen,
  kRgClosed,
  kRgOpen,
  kGscstarClosed,
  kGscstarOpen,
  kScstargClosed,
  kScstargOpen,
};

inline constexpr std::array kAllGenClasses = {
    GenClass::kScstarClosed, GenClass::kScstarOpen,    GenClass::kGClosed,       GenClass::kGOpen,
    GenClass::kRgClosed,     GenClass::kRgOpen,        GenClass::kGscstarClosed, GenClass::kGscstarOpen,
    GenClass::kScstargClosed, GenClass::kScstargOpen,
};

std::string_view to_string(GenClass tag);
std::optional<GenClass> parse_gen_class(std::string_view name);
GenClass dual(GenClass tag);

/// SC*-closed: s-cl(A) is contained in every c*-open superset of A.
bool is_scstar_closed(const Space& space, Subset a);
/// Intersection of all SC*-closed supersets.
Subset scstar_closure(const Space& space, Subset a);
/// Union of all SC*-open subsets.
Subset scstar_interior(const Space& space, Subset a);

/**
 * Literal quantified test for the generalized classes:
 *   g-closed       cl(A)     within every open U containing A
 *   rg-closed      cl(A)     within every regular-open U containing A
 *   gscstar-closed SC*-cl(A) within every open U containing A
 *   scstarg-closed SC*-cl(A) within every SC*-open U containing A
 * Open variants test the complement.
 */
bool generalized_class(const Space& space, Subset a, GenClass tag);

/// All SC*-open subsets, in canonical (ascending encoding) order.
std::vector<Subset> scstar_open_family(const SpaceProfile& profile);
std::vector<Subset> scstar_open_family(const Space& space);

struct LemmaViolation {
  std::string clause;  // "1.6(i)" ... "1.6(v)", "1.7"
  Subset subset;
  Subset witness;      // point set, second subset, or offending closure
  friend bool operator==(const LemmaViolation&, const LemmaViolation&) = default;
};

/// Clause-by-clause check of the SC*-closure characterization (point
/// membership, fixpoint, monotonicity, idempotence, SC*-closedness of the
/// closure) over every subset. Empty when all clauses hold.
std::vector<LemmaViolation> lemma_1_6_check(const SpaceProfile& profile);
/// gSC*-open(J) iff every closed F inside J lies in SC*-int(J).
std::vector<LemmaViolation> lemma_1_7_check(const SpaceProfile& profile);

}  // namespace topolab

#endif  // TOPOLAB_GEN_SETS_HPP
