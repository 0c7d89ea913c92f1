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

#ifndef TOPOLAB_THEOREMS_HPP
#define TOPOLAB_THEOREMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/io.hpp"

namespace topolab {

struct SweepOptions {
  int points = 0;  // 0 selects the theorem's default bound
  int jobs = 0;    // 0 selects the hardware concurrency
  bool timing = false;
  bool classical_hausdorff = false;  // T2.15 reads "Hausdorff" as classical T2
};

enum class ClauseRole {
  kStatement,  // decides the verdict
  kMonitor,    // alternative reading, reported only
};

struct ClauseReport {
  std::string name;
  ClauseRole role = ClauseRole::kStatement;
  std::string text;
  std::uint64_t applicable = 0;  // instances satisfying the hypotheses
  std::optional<Json> witness;   // first failing instance, replayable
};

struct TheoremReport {
  std::string id;
  int bound = 0;
  std::uint64_t instances = 0;
  std::vector<std::string> formalization;
  std::vector<ClauseReport> clauses;
  double seconds = 0;
  bool timing = false;

  bool verified() const;
  /// First failing statement clause, in registry order.
  const ClauseReport* counterexample() const;
  /// {"id", "bound", "verdict", "instances", ["seconds"], "formalization",
  /// "clauses", ["witness"]}. "seconds" only appears with timing enabled so
  /// that untimed reports are byte-stable.
  Json to_json() const;
};

enum class TheoremKind { kSpace, kMap, kComposition };

struct TheoremInfo {
  std::string id;
  TheoremKind kind;
  std::string summary;
  int default_bound;
};

/// Registered ids in registry order.
const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo& theorem_info(std::string_view id);  // throws kUnknownTheorem

/// Exhaustive sweep of one registered statement. Throws kUnknownTheorem and
/// kBoundExceeded (spaces above 5 points, maps above 4).
TheoremReport verify_theorem(std::string_view id, const SweepOptions& options = {});

/**
 * Hypothesis tags are conjoined; every tag must live on one level:
 *   space:  axiom and variant names, "scstar-t1-pointwise",
 *           "scstar-normal-shrinking", "t2", "discrete-space", "indiscrete-space"
 *   subset: set class names, quantified over every subset
 *   map:    map property names, quantified over every map
 */
struct SearchQuery {
  std::vector<std::string> hypothesis;
  std::string conclusion;
  int points = 0;
};

TheoremReport check_implication(const SearchQuery& query, const SweepOptions& options = {});

struct ReplayResult {
  bool reproduced = false;  // the clause fails again with the same detail
  std::string clause;
  Json detail;              // detail observed on replay (null when the clause holds)
};

/// Re-evaluates a witness produced by verify_theorem or check_implication.
ReplayResult replay_witness(const Json& witness, const SweepOptions& options = {});

}  // namespace topolab

#endif  // TOPOLAB_THEOREMS_HPP
