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

#include "topolab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "topolab/enumerate.hpp"
#include "topolab/separation.hpp"

namespace topolab {

namespace {

Json space_doc(const std::string& name, std::vector<std::string> points, std::vector<std::vector<std::string>> opens) {
  Json doc;
  doc["name"] = name;
  doc["points"] = std::move(points);
  doc["opens"] = std::move(opens);
  return doc;
}

Json labels_json(const Space& space, Subset a) {
  Json out = Json::array();
  for_each_point(a, [&](int p) { out.push_back(space.label(p)); });
  return out;
}

Json family_json(const Space& space, const std::vector<Subset>& family) {
  Json out = Json::array();
  for (Subset a : family) out.push_back(labels_json(space, a));
  return out;
}

std::vector<Subset> sets_from(const Space& space, const std::vector<std::string>& literals) {
  std::vector<Subset> out;
  for (const auto& l : literals) out.push_back(parse_subset(space, l));
  std::sort(out.begin(), out.end());
  return out;
}

// Family of separating sets and of separated sets for the regularity family.
struct SeparationShape {
  SetClass separated;
  SetClass around;
};

std::optional<SeparationShape> shape_of(Axiom a) {
  switch (a) {
    case Axiom::kRegular:
      return SeparationShape{SetClass::kClosed, SetClass::kOpen};
    case Axiom::kGRegular:
      return SeparationShape{SetClass::kClosed, SetClass::kGOpen};
    case Axiom::kScstarRegular:
      return SeparationShape{SetClass::kClosed, SetClass::kScstarOpen};
    case Axiom::kAlphaRegular:
      return SeparationShape{SetClass::kClosed, SetClass::kAlphaOpen};
    case Axiom::kSoftlyRegular:
      return SeparationShape{SetClass::kPiClosed, SetClass::kOpen};
    case Axiom::kAlmostRegular:
      return SeparationShape{SetClass::kRegularClosed, SetClass::kOpen};
    case Axiom::kStronglyRgRegular:
      return SeparationShape{SetClass::kRgClosed, SetClass::kOpen};
    default:
      return std::nullopt;
  }
}

// First (F, x) that the axiom fails to separate, or the first (x, U) for
// weak regularity.
Json axiom_failure(const SpaceProfile& p, Axiom a) {
  const Space& s = p.space();
  if (auto shape = shape_of(a)) {
    const auto& around = p.family(shape->around);
    for (Subset f : p.family(shape->separated)) {
      for (int x = 0; x < s.size(); ++x) {
        if (f.contains(x) || separates(around, around, f, x)) continue;
        return {{"F", labels_json(s, f)}, {"x", s.label(x)}};
      }
    }
    return nullptr;
  }
  if (a == Axiom::kWeaklyRegular) {
    for (Subset u : p.family(SetClass::kRegularOpen)) {
      for (int x = 0; x < s.size(); ++x) {
        if (!u.contains(x)) continue;
        bool found = false;
        for (Subset v : p.family(SetClass::kOpen)) {
          if (v.contains(x) && p.closure(v).is_subset_of(u)) {
            found = true;
            break;
          }
        }
        if (!found) return {{"U", labels_json(s, u)}, {"x", s.label(x)}};
      }
    }
  }
  return nullptr;
}

struct AxiomClaim {
  Axiom axiom;
  bool stated;
};

struct SetClaim {
  std::string set;
  SetClass cls;
  bool stated;
};

struct ListClaim {
  SetClass cls;
  std::vector<std::string> sets;
};

struct FixtureClaims {
  std::string id;
  std::vector<ListClaim> lists;
  std::vector<AxiomClaim> axioms;
  std::vector<SetClaim> sets;
};

const std::vector<FixtureClaims>& claims() {
  const std::vector<std::string> all16 = {"",      "k",     "l",     "m",     "n",     "k,l",   "k,m",   "k,n",
                                          "l,m",   "l,n",   "m,n",   "k,l,m", "k,l,n", "k,m,n", "l,m,n", "k,l,m,n"};
  static const std::vector<FixtureClaims> table = {
      {"example-1.8",
       {{SetClass::kClosed, {"", "n", "l,n", "m,n", "k,m,n", "l,m,n", "k,l,m,n"}},
        {SetClass::kGClosed, {"", "k,l,m,n", "n", "k,n", "l,n", "m,n", "k,l,n", "k,m,n", "l,m,n"}},
        {SetClass::kScstarClosed, all16},
        {SetClass::kGscstarClosed, all16},
        {SetClass::kScstargClosed, all16}},
       {},
       {}},
      {"example-2.5",
       {},
       {{Axiom::kRegular, true}, {Axiom::kGRegular, true}, {Axiom::kScstarRegular, true}},
       {}},
      {"example-2.6",
       {},
       {{Axiom::kWeaklyRegular, true}, {Axiom::kAlmostRegular, false}, {Axiom::kSoftlyRegular, false}},
       {}},
      {"example-2.7", {}, {{Axiom::kAlmostRegular, true}, {Axiom::kStronglyRgRegular, false}}, {}},
      {"example-2.8", {}, {{Axiom::kRegular, true}}, {}},
      {"example-2.9",
       {},
       {{Axiom::kRegular, true}, {Axiom::kStronglyRgRegular, false}},
       {{"l", SetClass::kRgClosed, true}}},
  };
  return table;
}

// Sweep of closure properties over every subset of every space with at most
// three points. `member` names the class the closure should land in.
ReportRow closure_sweep(const std::string& claim, RowKind kind,
                        const std::vector<std::shared_ptr<const SpaceProfile>>& universe,
                        Subset (SpaceProfile::*op)(Subset) const, std::optional<SetClass> member) {
  ReportRow row{"all spaces, n <= 3", claim, kind, kind == RowKind::kClaim ? Json(true) : Json(), true, true, nullptr};
  for (const auto& p : universe) {
    bool failed = false;
    for_each_subset(p->size(), [&](Subset a) {
      if (failed) return;
      const Subset c = ((*p).*op)(a);
      const bool ok = member ? p->has(c, *member) : ((*p).*op)(c) == c;
      if (ok) return;
      failed = true;
      row.witness = {{"space", space_to_json(p->space())},
                     {"set", labels_json(p->space(), a)},
                     {"closure", labels_json(p->space(), c)}};
    });
    if (failed) {
      row.engine = false;
      row.agree = false;
      break;
    }
  }
  return row;
}

}  // namespace

const std::vector<Fixture>& bundled_fixtures() {
  static const std::vector<Fixture> fixtures = {
      {"example-1.8", space_doc("example-1.8", {"k", "l", "m", "n"},
                                {{}, {"k"}, {"l"}, {"k", "l"}, {"k", "m"}, {"k", "l", "m"}, {"k", "l", "m", "n"}})},
      {"example-2.5",
       space_doc("example-2.5", {"k", "l", "m", "n"},
                 {{}, {"k"}, {"l"}, {"k", "l"}, {"m", "n"}, {"k", "m", "n"}, {"l", "m", "n"}, {"k", "l", "m", "n"}})},
      {"example-2.6", space_doc("example-2.6", {"k", "l", "m"}, {{}, {"k"}, {"l"}, {"k", "l"}, {"k", "l", "m"}})},
      {"example-2.7", space_doc("example-2.7", {"k", "l", "m", "n"},
                                {{}, {"k"}, {"l"}, {"k", "l"}, {"k", "l", "m"}, {"k", "l", "n"}, {"k", "l", "m", "n"}})},
      {"example-2.8",
       space_doc("example-2.8", {"k", "l", "m"}, {{}, {"k"}, {"l"}, {"k", "l"}, {"k", "m"}, {"k", "l", "m"}})},
      {"example-2.9", space_doc("example-2.9", {"k", "l", "m"}, {{}, {"k"}, {"l", "m"}, {"k", "l", "m"}})},
  };
  return fixtures;
}

Space fixture_space(std::string_view id) {
  for (const auto& f : bundled_fixtures()) {
    if (f.id == id) return parse_space(f.doc);
  }
  throw Error(ErrorCode::kMalformedDocument, "no bundled fixture '" + std::string(id) + "'");
}

std::string ReportRow::status() const {
  if (kind == RowKind::kMonitor) return agree ? "HOLDS" : "FAILS";
  return agree ? "AGREE" : "DISAGREE";
}

bool DiscrepancyReport::any_disagreement() const {
  return std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.kind == RowKind::kClaim && !r.agree; });
}

std::vector<Json> DiscrepancyReport::to_json_lines() const {
  std::vector<Json> out;
  std::size_t disagreements = 0;
  for (const auto& r : rows) disagreements += r.kind == RowKind::kClaim && !r.agree;
  Json header;
  header["report"] = "discrepancy";
  header["notes"] = notes;
  header["rows"] = rows.size();
  header["disagreements"] = disagreements;
  out.push_back(std::move(header));
  for (const auto& r : rows) {
    Json line;
    line["fixture"] = r.fixture;
    line["claim"] = r.claim;
    line["kind"] = r.kind == RowKind::kClaim ? "claim" : "monitor";
    line["stated"] = r.stated;
    line["engine"] = r.engine;
    line["status"] = r.status();
    if (!r.witness.is_null()) line["witness"] = r.witness;
    out.push_back(std::move(line));
  }
  return out;
}

std::string DiscrepancyReport::to_table() const {
  auto cell = [](const Json& v) {
    if (v.is_null()) return std::string("-");
    if (v.is_array()) return std::to_string(v.size()) + " sets";
    return v.dump();
  };
  std::ostringstream out;
  for (const auto& n : notes) out << "# " << n << "\n";
  out << std::left << std::setw(20) << "fixture" << std::setw(34) << "claim" << std::setw(10) << "stated"
      << std::setw(10) << "engine" << "status\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(20) << r.fixture << std::setw(34) << r.claim << std::setw(10) << cell(r.stated)
        << std::setw(10) << cell(r.engine) << r.status() << "\n";
    if (!r.witness.is_null() && !r.agree) out << "    witness: " << r.witness.dump() << "\n";
  }
  return out.str();
}

DiscrepancyReport paper_report() {
  DiscrepancyReport report;
  report.notes = {
      "inclusion symbols in set definitions are read as non-strict",
      "example-2.7 lists its carrier as {l,m,c,d}; the fixture uses {k,l,m,n}, the points of its topology",
      "regularity verdicts come from a scan of every (separated set, point) pair",
      "monitor rows are engine facts, not stated claims, and do not affect the exit status",
  };
  for (const FixtureClaims& fc : claims()) {
    const SpaceProfile p(fixture_space(fc.id));
    const Space& s = p.space();
    for (const ListClaim& lc : fc.lists) {
      const std::vector<Subset> stated = sets_from(s, lc.sets);
      const std::vector<Subset>& engine = p.family(lc.cls);
      ReportRow row{fc.id, std::string(to_string(lc.cls)) + " list", RowKind::kClaim,
                    family_json(s, stated), family_json(s, engine), stated == engine, nullptr};
      if (!row.agree) {
        std::vector<Subset> missing, extra;
        std::set_difference(stated.begin(), stated.end(), engine.begin(), engine.end(), std::back_inserter(missing));
        std::set_difference(engine.begin(), engine.end(), stated.begin(), stated.end(), std::back_inserter(extra));
        row.witness = {{"stated_only", family_json(s, missing)}, {"engine_only", family_json(s, extra)}};
      }
      report.rows.push_back(std::move(row));
    }
    for (const AxiomClaim& ac : fc.axioms) {
      const bool engine = axiom(p, ac.axiom);
      ReportRow row{fc.id, std::string(to_string(ac.axiom)), RowKind::kClaim, ac.stated, engine,
                    engine == ac.stated, nullptr};
      if (!engine) row.witness = axiom_failure(p, ac.axiom);
      report.rows.push_back(std::move(row));
    }
    for (const SetClaim& sc : fc.sets) {
      const Subset a = parse_subset(s, sc.set);
      const bool engine = p.has(a, sc.cls);
      report.rows.push_back({fc.id, "{" + sc.set + "} " + std::string(to_string(sc.cls)), RowKind::kClaim, sc.stated,
                             engine, engine == sc.stated, nullptr});
    }
  }
  const auto universe = profile_universe(3);
  report.rows.push_back(closure_sweep("scstar-cl(A) is scstar-closed", RowKind::kClaim, universe,
                                      &SpaceProfile::scstar_closure, SetClass::kScstarClosed));
  report.rows.push_back(
      closure_sweep("scstar-cl is idempotent", RowKind::kClaim, universe, &SpaceProfile::scstar_closure, std::nullopt));
  report.rows.push_back(closure_sweep("semi-cl(A) is semi-closed", RowKind::kMonitor, universe,
                                      &SpaceProfile::semi_closure, SetClass::kSemiClosed));
  report.rows.push_back(closure_sweep("cstar-cl(A) is cstar-closed", RowKind::kMonitor, universe,
                                      &SpaceProfile::cstar_closure, SetClass::kCstarClosed));
  return report;
}

}  // namespace topolab
