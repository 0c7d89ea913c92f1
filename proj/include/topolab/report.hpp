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

#ifndef TOPOLAB_REPORT_HPP
#define TOPOLAB_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "topolab/io.hpp"

namespace topolab {

struct Fixture {
  std::string id;  // "example-1.8", ...
  Json doc;        // space document, identical to fixtures/<id>.json
};

const std::vector<Fixture>& bundled_fixtures();
Space fixture_space(std::string_view id);  // throws kMalformedDocument for unknown ids

enum class RowKind {
  kClaim,    // a stated claim; disagreement fails the report
  kMonitor,  // an engine property tracked for visibility only
};

struct ReportRow {
  std::string fixture;
  std::string claim;
  RowKind kind = RowKind::kClaim;
  Json stated;   // claimed value (null for monitors)
  Json engine;   // engine value
  bool agree = true;
  Json witness;  // null when nothing to show

  std::string status() const;  // AGREE / DISAGREE, or HOLDS / FAILS for monitors
};

struct DiscrepancyReport {
  std::vector<std::string> notes;
  std::vector<ReportRow> rows;

  bool any_disagreement() const;
  /// Header record followed by one record per row.
  std::vector<Json> to_json_lines() const;
  std::string to_table() const;
};

/// Compares every bundled fixture claim against the engine, plus the SC*-closure
/// lemma sweep and closure monitors over all spaces with at most 3 points.
DiscrepancyReport paper_report();

}  // namespace topolab

#endif  // TOPOLAB_REPORT_HPP
