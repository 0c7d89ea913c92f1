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

#include "topolab/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <utility>

#include "topolab/enumerate.hpp"
#include "topolab/separation.hpp"
#include "topolab/sweep.hpp"

namespace topolab {

namespace {

// ---------------------------------------------------------------------------
// Instances and clauses

struct SpaceCase {
  const SpaceProfile& p;
  const AxiomVector& ax;
};

struct MapCase {
  MapView f;
  const PropertyVector& pf;
  const AxiomVector& dom;
  const AxiomVector& cod;
};

struct CompositionCase {
  MapView f;
  MapView g;
  const PropertyVector& pf;
  const PropertyVector& pg;
};

struct Check {
  bool applicable = false;
  bool holds = true;
  Json detail;
};

template <class Case>
struct Clause {
  std::string name;
  ClauseRole role = ClauseRole::kStatement;
  std::string text;
  std::function<Check(const Case&)> check;
};

template <class Case>
struct Term {
  std::string name;
  std::function<bool(const Case&)> eval;
};

// A conclusion that explains itself: nullopt when it holds.
template <class Case>
struct Conclusion {
  std::string name;
  std::function<std::optional<Json>(const Case&)> violation;
};

template <class Case>
Conclusion<Case> as_conclusion(Term<Case> t) {
  return {t.name, [eval = t.eval](const Case& c) -> std::optional<Json> {
            if (eval(c)) return std::nullopt;
            return Json(false);
          }};
}

template <class Case>
std::string conjunction(const std::vector<Term<Case>>& terms) {
  std::string out;
  for (const auto& t : terms) out += (out.empty() ? "" : " & ") + t.name;
  return out;
}

template <class Case>
Clause<Case> arrow(std::vector<Term<Case>> hyps, Conclusion<Case> concl, ClauseRole role = ClauseRole::kStatement,
                   std::string text = {}) {
  std::string name = conjunction(hyps) + " => " + concl.name;
  Json hyp_names = Json::array();
  for (const auto& h : hyps) hyp_names.push_back(h.name);
  return {name, role, std::move(text), [hyps = std::move(hyps), concl, hyp_names](const Case& c) {
            Check out;
            for (const auto& h : hyps) {
              if (!h.eval(c)) return out;
            }
            out.applicable = true;
            if (auto v = concl.violation(c)) {
              out.holds = false;
              out.detail = {{"hypotheses", hyp_names}, {"conclusion", concl.name}, {"violation", *v}};
            }
            return out;
          }};
}

template <class Case>
Clause<Case> arrow(std::vector<Term<Case>> hyps, Term<Case> concl, ClauseRole role = ClauseRole::kStatement,
                   std::string text = {}) {
  return arrow(std::move(hyps), as_conclusion(std::move(concl)), role, std::move(text));
}

// left <=> right, restricted to instances satisfying `hyps`.
template <class Case>
Clause<Case> equivalence(std::vector<Term<Case>> hyps, Term<Case> left, Conclusion<Case> right,
                         ClauseRole role = ClauseRole::kStatement, std::string text = {}) {
  std::string name = left.name + " <=> " + right.name;
  if (!hyps.empty()) name = conjunction(hyps) + " => (" + name + ")";
  return {name, role, std::move(text), [hyps = std::move(hyps), left, right](const Case& c) {
            Check out;
            for (const auto& h : hyps) {
              if (!h.eval(c)) return out;
            }
            out.applicable = true;
            const bool l = left.eval(c);
            const std::optional<Json> v = right.violation(c);
            if (l == !v.has_value()) return out;
            out.holds = false;
            out.detail = {{left.name, l}, {right.name, !v.has_value()}};
            if (v && !v->is_boolean()) out.detail["violation"] = *v;
            return out;
          }};
}

template <class Case>
Clause<Case> equivalence(std::vector<Term<Case>> hyps, Term<Case> left, Term<Case> right,
                         ClauseRole role = ClauseRole::kStatement, std::string text = {}) {
  return equivalence(std::move(hyps), std::move(left), as_conclusion(std::move(right)), role, std::move(text));
}

Json labels_json(const Space& space, Subset a) {
  Json out = Json::array();
  for_each_point(a, [&](int p) { out.push_back(space.label(p)); });
  return out;
}

// ---------------------------------------------------------------------------
// Space-level vocabulary

using SpaceTerm = Term<SpaceCase>;
using MapTerm = Term<MapCase>;
using CompTerm = Term<CompositionCase>;

SpaceTerm ax(Axiom a) {
  return {std::string(to_string(a)), [a](const SpaceCase& c) { return c.ax[a]; }};
}
SpaceTerm var(Variant v) {
  return {std::string(to_string(v)), [v](const SpaceCase& c) { return c.ax[v]; }};
}
SpaceTerm t1_pointwise() {
  return {"scstar-t1-pointwise", [](const SpaceCase& c) { return c.ax.scstar_t1_pointwise; }};
}
SpaceTerm t2_classical() {
  return {"t2", [](const SpaceCase& c) { return c.ax.t2; }};
}

// Every subset in `from` is in `to`.
Clause<SpaceCase> set_arrow(SetClass from, SetClass to, ClauseRole role = ClauseRole::kStatement) {
  std::string name = std::string(to_string(from)) + " => " + std::string(to_string(to));
  return {name, role, {}, [from, to](const SpaceCase& c) {
            Check out{true, true, {}};
            for (Subset a : c.p.family(from)) {
              if (!c.p.has(a, to)) {
                out.holds = false;
                out.detail = {{"set", labels_json(c.p.space(), a)}};
                break;
              }
            }
            return out;
          }};
}

Clause<SpaceCase> set_equivalence(SetClass a_class, SetClass b_class) {
  std::string name = std::string(to_string(a_class)) + " <=> " + std::string(to_string(b_class));
  return {name, ClauseRole::kStatement, {}, [a_class, b_class](const SpaceCase& c) {
            Check out{true, true, {}};
            const std::uint32_t a_bit = 1U << static_cast<int>(a_class);
            const std::uint32_t b_bit = 1U << static_cast<int>(b_class);
            for_each_subset(c.p.size(), [&](Subset s) {
              if (!out.holds) return;
              const std::uint32_t bits = c.p.classes(s).bits();
              if (((bits & a_bit) != 0) != ((bits & b_bit) != 0)) {
                out.holds = false;
                out.detail = {{"set", labels_json(c.p.space(), s)},
                              {std::string(to_string(a_class)), (bits & a_bit) != 0},
                              {std::string(to_string(b_class)), (bits & b_bit) != 0}};
              }
            });
            return out;
          }};
}

Clause<SpaceCase> lemma_clause(std::string label, std::string text,
                               std::vector<LemmaViolation> (*fn)(const SpaceProfile&)) {
  return {label, ClauseRole::kStatement, std::move(text), [label, fn](const SpaceCase& c) {
            Check out{true, true, {}};
            for (const auto& v : fn(c.p)) {
              if (v.clause != label) continue;
              out.holds = false;
              out.detail = {{"set", labels_json(c.p.space(), v.subset)},
                            {"witness", labels_json(c.p.space(), v.witness)}};
              break;
            }
            return out;
          }};
}

Clause<SpaceCase> hereditary_clause() {
  return {"scstar-regular => every nonempty subspace scstar-regular", ClauseRole::kStatement, {},
          [](const SpaceCase& c) {
            Check out;
            if (!c.ax[Axiom::kScstarRegular]) return out;
            out.applicable = true;
            const Space& s = c.p.space();
            for_each_subset(s.size(), [&](Subset carrier) {
              if (!out.holds || carrier.count() == 0) return;
              const SpaceProfile sub(subspace(s, carrier));
              if (!axiom(sub, Axiom::kScstarRegular)) {
                out.holds = false;
                out.detail = {{"carrier", labels_json(s, carrier)}};
              }
            });
            return out;
          }};
}

// ---------------------------------------------------------------------------
// Map-level vocabulary

MapTerm prop(MapProperty p) {
  return {std::string(to_string(p)), [p](const MapCase& c) { return c.pf[p]; }};
}
MapTerm dom(Axiom a) {
  return {"X " + std::string(to_string(a)), [a](const MapCase& c) { return c.dom[a]; }};
}
MapTerm cod(Axiom a) {
  return {"Y " + std::string(to_string(a)), [a](const MapCase& c) { return c.cod[a]; }};
}

std::string class_name(std::optional<SetClass> c) { return c ? std::string(to_string(*c)) : "every subset"; }

Conclusion<MapCase> envelope(std::optional<SetClass> j, SetClass m, SetClass n) {
  std::string name = "envelope(J: " + class_name(j) + ", M: " + class_name(m) + ", N: " + class_name(n) + ")";
  return {name, [j, m, n](const MapCase& c) -> std::optional<Json> {
            auto fail = envelope_failure(c.f, j, m, n);
            if (!fail) return std::nullopt;
            return Json{{"J", labels_json(c.f.codomain().space(), fail->first)},
                        {"M", labels_json(c.f.domain().space(), fail->second)}};
          }};
}

Conclusion<MapCase> preserves_images(SetClass c_class) {
  std::string name = "images of " + std::string(to_string(c_class)) + " sets are " + std::string(to_string(c_class));
  return {name, [c_class](const MapCase& c) -> std::optional<Json> {
            auto bad = image_violation(c.f, c_class, c_class);
            if (!bad) return std::nullopt;
            return Json{{"set", labels_json(c.f.domain().space(), *bad)}};
          }};
}

Conclusion<MapCase> preserves_preimages(SetClass c_class) {
  std::string name =
      "preimages of " + std::string(to_string(c_class)) + " sets are " + std::string(to_string(c_class));
  return {name, [c_class](const MapCase& c) -> std::optional<Json> {
            auto bad = preimage_violation(c.f, c_class, c_class);
            if (!bad) return std::nullopt;
            return Json{{"set", labels_json(c.f.codomain().space(), *bad)}};
          }};
}

Clause<MapCase> sides_clause(std::string name, LemmaSides (*fn)(const MapView&), bool two_way) {
  return {std::move(name), ClauseRole::kStatement, {}, [fn, two_way](const MapCase& c) {
            Check out{true, true, {}};
            const LemmaSides s = fn(c.f);
            if (two_way ? s.left != s.right : (s.left && !s.right)) {
              out.holds = false;
              out.detail = {{"left", s.left}, {"right", s.right}};
            }
            return out;
          }};
}

// ---------------------------------------------------------------------------
// Composition vocabulary

CompTerm on_f(MapProperty p) {
  return {"f " + std::string(to_string(p)), [p](const CompositionCase& c) { return c.pf[p]; }};
}
CompTerm on_g(MapProperty p) {
  return {"g " + std::string(to_string(p)), [p](const CompositionCase& c) { return c.pg[p]; }};
}
CompTerm on_gf(MapProperty p) {
  return {"g.f " + std::string(to_string(p)),
          [p](const CompositionCase& c) { return map_property(compose(c.f, c.g), p); }};
}

// ---------------------------------------------------------------------------
// Registry

struct Theorem {
  TheoremInfo info;
  std::vector<std::string> formalization;
  std::vector<Clause<SpaceCase>> space;
  std::vector<Clause<MapCase>> map;
  std::vector<Clause<CompositionCase>> composition;
};

constexpr int kSpaceBound = 4;
constexpr int kMapBound = 3;

const std::vector<TheoremInfo>& registry() {
  static const std::vector<TheoremInfo> infos = {
      {"R1.4", TheoremKind::kSpace, "closed => SC*-closed <=> SC*g-closed <=> gSC*-closed, closed => g-closed",
       kSpaceBound},
      {"L1.6", TheoremKind::kSpace, "SC*-closure: point criterion, fixpoints, monotone, idempotent, SC*-closed",
       kSpaceBound},
      {"L1.7", TheoremKind::kSpace, "gSC*-open iff every closed subset lies in the SC*-interior", kSpaceBound},
      {"R2.4", TheoremKind::kSpace, "hierarchy of regularity axioms", kSpaceBound},
      {"T2.10", TheoremKind::kSpace, "five characterizations of SC*-regularity agree", kSpaceBound},
      {"T2.11", TheoremKind::kSpace, "SC*-regular iff separable with disjoint SC*-closures", kSpaceBound},
      {"T2.13", TheoremKind::kSpace, "SC*-T3 => SC*-T2", kSpaceBound},
      {"T2.14", TheoremKind::kSpace, "SC*-regularity is hereditary", kSpaceBound},
      {"T2.15", TheoremKind::kSpace, "SC*-compact Hausdorff => SC*-T3 and SC*-regular", kSpaceBound},
      {"T3.3", TheoremKind::kMap, "strongly-SC*-closed iff the SC*-open envelope condition", kMapBound},
      {"L3.4", TheoremKind::kMap, "almost-SC*-irresolute iff preimages of SC*-open N lie in SC*-int(SC*-cl)",
       kMapBound},
      {"T3.5", TheoremKind::kMap, "almost-SC*-irresolute iff the SC*-closure image condition", kMapBound},
      {"T3.6", TheoremKind::kMap, "SC*-regularity of images from SC*-normal domains", kMapBound},
      {"T3.7", TheoremKind::kMap, "strongly-SC*-closed continuous images of SC*-regular spaces", kMapBound},
      {"R4.4", TheoremKind::kMap, "closed => SC*-closed => gSC*-closed maps; SC*-gSC*-closed => gSC*-closed",
       kMapBound},
      {"T4.5", TheoremKind::kMap, "envelope characterizations of gSC*-closed and SC*-gSC*-closed surjections",
       kMapBound},
      {"P4.7", TheoremKind::kMap, "closed-set envelopes with SC*-open N", kMapBound},
      {"P4.8", TheoremKind::kMap, "continuous SC*-gSC*-closed maps preserve gSC*-closed sets", kMapBound},
      {"P4.10", TheoremKind::kMap, "open SC*-irresolute bijections reflect gSC*-closed sets", kMapBound},
      {"T4.11", TheoremKind::kComposition, "gSC*-closedness under composition", kMapBound},
      {"T4.12", TheoremKind::kSpace, "characterizations of SC*-regularity through gSC*-open sets", kSpaceBound},
      {"T4.14", TheoremKind::kMap, "SC*-open gSC*-closed continuous images of regular spaces", kMapBound},
      {"T4.16", TheoremKind::kMap, "pre-SC*-open SC*-gSC*-closed continuous images", kMapBound},
      {"T5.1", TheoremKind::kMap, "quasi-SC*-closed gSC*-closed continuous images are regular", kMapBound},
      {"L5.2", TheoremKind::kSpace, "gSC*-open iff every closed subset lies in the SC*-interior", kSpaceBound},
      {"T5.3", TheoremKind::kMap, "closed SC*-gSC*-continuous injections reflect SC*-regularity", kMapBound},
      {"C5.4", TheoremKind::kMap, "closed SC*-irresolute injections reflect SC*-regularity", kMapBound},
      {"L5.5", TheoremKind::kMap, "almost-gSC*-closed iff the regular-open envelope condition", kMapBound},
      {"L5.6", TheoremKind::kMap, "almost-gSC*-closed gives SC*-open envelopes of closed sets", kMapBound},
      {"T5.7", TheoremKind::kMap, "continuous almost-gSC*-closed images of regular spaces", kMapBound},
  };
  return infos;
}

Theorem make_theorem(const TheoremInfo& info, const SweepOptions& options) {
  using A = Axiom;
  using M = MapProperty;
  using S = SetClass;
  using V = Variant;
  constexpr auto kMonitor = ClauseRole::kMonitor;
  Theorem t{info, {}, {}, {}, {}};
  const std::string& id = info.id;

  if (id == "R1.4") {
    t.formalization = {"the downward arrow is read from its position under \"closed\"",
                       "arrows into g-closed from the SC*-family are monitored"};
    t.space = {set_arrow(S::kClosed, S::kScstarClosed), set_equivalence(S::kScstarClosed, S::kScstargClosed),
               set_equivalence(S::kScstargClosed, S::kGscstarClosed), set_arrow(S::kClosed, S::kGClosed),
               set_arrow(S::kScstarClosed, S::kGClosed, kMonitor), set_arrow(S::kGscstarClosed, S::kGClosed, kMonitor)};
  } else if (id == "L1.6") {
    t.space = {lemma_clause("1.6(i)", "x in SC*-cl(J) iff every SC*-open set around x meets J", lemma_1_6_check),
               lemma_clause("1.6(ii)", "J is SC*-closed iff J = SC*-cl(J)", lemma_1_6_check),
               lemma_clause("1.6(iii)", "J inside I gives SC*-cl(J) inside SC*-cl(I)", lemma_1_6_check),
               lemma_clause("1.6(iv)", "SC*-cl is idempotent", lemma_1_6_check),
               lemma_clause("1.6(v)", "SC*-cl(J) is SC*-closed", lemma_1_6_check)};
  } else if (id == "L1.7" || id == "L5.2") {
    t.space = {lemma_clause("1.7", "J gSC*-open iff every closed F inside J lies in SC*-int(J)", lemma_1_7_check)};
  } else if (id == "R2.4") {
    t.formalization = {"the downward arrow is read from its position under \"strongly rg-regular\"",
                       "regular => softly-regular is monitored"};
    t.space = {arrow<SpaceCase>({ax(A::kStronglyRgRegular)}, ax(A::kRegular)),
               arrow<SpaceCase>({ax(A::kRegular)}, ax(A::kAlphaRegular)),
               arrow<SpaceCase>({ax(A::kAlphaRegular)}, ax(A::kScstarRegular)),
               arrow<SpaceCase>({ax(A::kStronglyRgRegular)}, ax(A::kSoftlyRegular)),
               arrow<SpaceCase>({ax(A::kSoftlyRegular)}, ax(A::kAlmostRegular)),
               arrow<SpaceCase>({ax(A::kAlmostRegular)}, ax(A::kWeaklyRegular)),
               arrow<SpaceCase>({ax(A::kRegular)}, ax(A::kSoftlyRegular), kMonitor)};
  } else if (id == "T2.10") {
    for (V v : {V::kShrinkingNeighborhood, V::kClosedIntersection, V::kSetShrinking, V::kSetSeparation}) {
      t.space.push_back(equivalence<SpaceCase>({}, var(V::kDefinition), var(v)));
    }
  } else if (id == "T2.11") {
    t.space = {equivalence<SpaceCase>({}, var(V::kDefinition), var(V::kSeparatedClosures))};
  } else if (id == "T2.13") {
    t.formalization = {"scstar-t1: every singleton is SC*-closed; pointwise form monitored"};
    t.space = {arrow<SpaceCase>({ax(A::kScstarT3)}, ax(A::kScstarT2)),
               equivalence<SpaceCase>({}, ax(A::kScstarT1), t1_pointwise(), kMonitor)};
  } else if (id == "T2.14") {
    t.formalization = {"every nonempty carrier, subspace topology"};
    t.space = {hereditary_clause()};
  } else if (id == "T2.15") {
    const auto primary = options.classical_hausdorff ? ClauseRole::kMonitor : ClauseRole::kStatement;
    const auto classical = options.classical_hausdorff ? ClauseRole::kStatement : ClauseRole::kMonitor;
    t.formalization = {options.classical_hausdorff ? "Hausdorff read as classical t2; scstar-t2 reading monitored"
                                                   : "Hausdorff read as scstar-t2; classical t2 reading monitored"};
    t.space = {arrow<SpaceCase>({ax(A::kScstarCompact), ax(A::kScstarT2)}, ax(A::kScstarT3), primary),
               arrow<SpaceCase>({ax(A::kScstarCompact), ax(A::kScstarT2)}, ax(A::kScstarRegular), primary),
               arrow<SpaceCase>({ax(A::kScstarCompact), t2_classical()}, ax(A::kScstarT3), classical),
               arrow<SpaceCase>({ax(A::kScstarCompact), t2_classical()}, ax(A::kScstarRegular), classical)};
  } else if (id == "T4.12") {
    t.formalization = {"t4.12-iii quantifies over nonempty J"};
    for (V v : {V::kMixedSeparation, V::kMixedSetSeparation, V::kMixedClosedIntersection}) {
      t.space.push_back(equivalence<SpaceCase>({}, var(V::kDefinition), var(v)));
    }
  } else if (id == "T3.3") {
    t.map = {equivalence<MapCase>({}, prop(M::kStronglyScstarClosed),
                                  envelope(std::nullopt, S::kScstarOpen, S::kScstarOpen))};
  } else if (id == "L3.4") {
    t.map = {sides_clause("almost-scstar-irresolute <=> preimages of scstar-open N inside scstar-int(scstar-cl)",
                          lemma_3_4_check, true)};
  } else if (id == "T3.5") {
    t.formalization = {"inclusion evaluated as f(SC*-cl(M)) inside SC*-cl(f(M)) for every SC*-open M"};
    t.map = {equivalence<MapCase>({}, prop(M::kAlmostScstarIrresolute),
                                  MapTerm{"closure-image-condition",
                                          [](const MapCase& c) { return closure_image_condition(c.f); }})};
  } else if (id == "T3.6") {
    t.formalization = {"scstar-normal: disjoint closed sets separated by disjoint SC*-open sets",
                       "shrinking form of scstar-normal monitored"};
    const std::vector<MapTerm> base = {prop(M::kSurjective), prop(M::kStronglyScstarOpen), prop(M::kContinuous),
                                       prop(M::kAlmostScstarIrresolute)};
    auto with = [&](MapTerm extra) {
      auto h = base;
      h.push_back(std::move(extra));
      return h;
    };
    t.map = {arrow<MapCase>(with(dom(A::kScstarNormal)), cod(A::kScstarRegular)),
             arrow<MapCase>(with(MapTerm{"X scstar-normal-shrinking",
                                         [](const MapCase& c) { return c.dom.scstar_normal_shrinking; }}),
                            cod(A::kScstarRegular), kMonitor),
             equivalence<MapCase>({}, dom(A::kScstarNormal),
                                  MapTerm{"X scstar-normal-shrinking",
                                          [](const MapCase& c) { return c.dom.scstar_normal_shrinking; }},
                                  kMonitor)};
  } else if (id == "T3.7") {
    t.map = {arrow<MapCase>({prop(M::kStronglyScstarClosed), prop(M::kContinuous), dom(A::kScstarRegular)},
                            cod(A::kScstarRegular))};
  } else if (id == "R4.4") {
    t.map = {arrow<MapCase>({prop(M::kClosedMap)}, prop(M::kScstarClosedMap)),
             arrow<MapCase>({prop(M::kScstarClosedMap)}, prop(M::kGscstarClosedMap)),
             arrow<MapCase>({prop(M::kScstarGscstarClosed)}, prop(M::kGscstarClosedMap))};
  } else if (id == "T4.5") {
    t.map = {equivalence<MapCase>({prop(M::kSurjective)}, prop(M::kGscstarClosedMap),
                                  envelope(std::nullopt, S::kOpen, S::kGscstarOpen)),
             equivalence<MapCase>({prop(M::kSurjective)}, prop(M::kScstarGscstarClosed),
                                  envelope(std::nullopt, S::kScstarOpen, S::kGscstarOpen))};
  } else if (id == "P4.7") {
    t.map = {arrow<MapCase>({prop(M::kSurjective), prop(M::kGscstarClosedMap)},
                            envelope(S::kClosed, S::kOpen, S::kScstarOpen)),
             arrow<MapCase>({prop(M::kSurjective), prop(M::kScstarGscstarClosed)},
                            envelope(S::kClosed, S::kScstarOpen, S::kScstarOpen))};
  } else if (id == "P4.8") {
    t.map = {arrow<MapCase>({prop(M::kContinuous), prop(M::kScstarGscstarClosed)},
                            preserves_images(S::kGscstarClosed))};
  } else if (id == "P4.10") {
    t.map = {arrow<MapCase>({prop(M::kOpenMap), prop(M::kScstarIrresolute), prop(M::kInjective), prop(M::kSurjective)},
                            preserves_preimages(S::kGscstarClosed))};
  } else if (id == "T4.11") {
    t.formalization = {"(ii) as stated repeats its hypothesis; the reading with f gSC*-closed is monitored"};
    t.composition = {
        arrow<CompositionCase>({on_f(M::kContinuous), on_f(M::kSurjective), on_gf(M::kGscstarClosedMap)},
                               on_g(M::kGscstarClosedMap), ClauseRole::kStatement, "(i)"),
        arrow<CompositionCase>(
            {on_g(M::kContinuous), on_g(M::kScstarGscstarClosed), on_gf(M::kGscstarClosedMap)},
            on_gf(M::kGscstarClosedMap), ClauseRole::kStatement, "(ii)"),
        arrow<CompositionCase>({on_g(M::kGscstarClosedMap), on_gf(M::kClosedMap)}, on_gf(M::kGscstarClosedMap),
                               ClauseRole::kStatement, "(iii)"),
        arrow<CompositionCase>(
            {on_f(M::kGscstarClosedMap), on_g(M::kContinuous), on_g(M::kScstarGscstarClosed)},
            on_gf(M::kGscstarClosedMap), kMonitor, "(ii), intended reading")};
  } else if (id == "T4.14") {
    t.map = {arrow<MapCase>({prop(M::kContinuous), prop(M::kScstarOpenMap), prop(M::kGscstarClosedMap),
                             prop(M::kSurjective), dom(A::kRegular)},
                            cod(A::kScstarRegular))};
  } else if (id == "T4.16") {
    t.map = {arrow<MapCase>({prop(M::kContinuous), prop(M::kPreScstarOpen), prop(M::kScstarGscstarClosed),
                             prop(M::kSurjective), dom(A::kScstarRegular)},
                            cod(A::kScstarRegular))};
  } else if (id == "T5.1") {
    t.formalization = {"r-space read as regular"};
    t.map = {arrow<MapCase>({prop(M::kContinuous), prop(M::kQuasiScstarClosed), prop(M::kGscstarClosedMap),
                             prop(M::kSurjective), dom(A::kScstarRegular)},
                            cod(A::kRegular))};
  } else if (id == "T5.3") {
    t.map = {arrow<MapCase>({prop(M::kClosedMap), prop(M::kScstarGscstarContinuous), prop(M::kInjective),
                             cod(A::kScstarRegular)},
                            dom(A::kScstarRegular))};
  } else if (id == "C5.4") {
    t.map = {arrow<MapCase>({prop(M::kClosedMap), prop(M::kScstarIrresolute), prop(M::kInjective),
                             cod(A::kScstarRegular)},
                            dom(A::kScstarRegular)),
             arrow<MapCase>({prop(M::kScstarIrresolute)}, prop(M::kScstarGscstarContinuous))};
  } else if (id == "L5.5") {
    t.map = {sides_clause("almost-gscstar-closed <=> envelope(J: every subset, M: regular-open, N: gscstar-open)",
                          lemma_5_5_check, true)};
  } else if (id == "L5.6") {
    t.map = {sides_clause("almost-gscstar-closed => envelope(J: closed, M: regular-open, N: scstar-open)",
                          lemma_5_6_check, false)};
  } else if (id == "T5.7") {
    t.map = {arrow<MapCase>({prop(M::kContinuous), prop(M::kAlmostGscstarClosed), prop(M::kSurjective),
                             dom(A::kRegular)},
                            cod(A::kScstarRegular))};
  }
  return t;
}

// ---------------------------------------------------------------------------
// Sweeps

struct Tally {
  std::uint64_t instances = 0;
  std::vector<std::uint64_t> applicable;
  std::vector<std::optional<Json>> witness;

  explicit Tally(std::size_t clauses) : applicable(clauses, 0), witness(clauses) {}

  void merge(Tally&& other) {
    instances += other.instances;
    for (std::size_t i = 0; i < applicable.size(); ++i) {
      applicable[i] += other.applicable[i];
      if (!witness[i] && other.witness[i]) witness[i] = std::move(other.witness[i]);
    }
  }
};

template <class Case, class InstanceJson>
void evaluate(const std::vector<Clause<Case>>& clauses, const Case& c, Tally& tally, const Json& header,
              InstanceJson&& instance) {
  ++tally.instances;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    Check r = clauses[i].check(c);
    if (r.applicable) ++tally.applicable[i];
    if (!r.holds && !tally.witness[i]) {
      Json w = header;
      w["clause"] = clauses[i].name;
      w["instance"] = instance();
      w["detail"] = std::move(r.detail);
      tally.witness[i] = std::move(w);
    }
  }
}

Tally merge_units(std::vector<Tally>& units, std::size_t clauses) {
  Tally total(clauses);
  for (auto& u : units) total.merge(std::move(u));
  return total;
}

std::vector<AxiomVector> classify_all(const std::vector<std::shared_ptr<const SpaceProfile>>& universe, int jobs) {
  std::vector<AxiomVector> out(universe.size());
  parallel_for(universe.size(), jobs, [&](std::size_t i) { out[i] = classify_space(*universe[i]); });
  return out;
}

template <class Fn>
void for_each_assignment(int n, int m, Fn&& fn) {
  MapView::Table assign{};
  while (true) {
    fn(assign);
    int digit = n - 1;
    while (digit >= 0 && ++assign[digit] == m) assign[digit--] = 0;
    if (digit < 0) return;
  }
}

Tally sweep_spaces(const std::vector<Clause<SpaceCase>>& clauses, int bound, int jobs, const Json& header) {
  const auto universe = profile_universe(bound);
  std::vector<Tally> units(universe.size(), Tally(clauses.size()));
  parallel_for(universe.size(), jobs, [&](std::size_t i) {
    const SpaceProfile& p = *universe[i];
    const AxiomVector ax = classify_space(p);
    evaluate(clauses, SpaceCase{p, ax}, units[i], header, [&] { return Json{{"space", space_to_json(p.space())}}; });
  });
  return merge_units(units, clauses.size());
}

Tally sweep_maps(const std::vector<Clause<MapCase>>& clauses, int bound, int jobs, const Json& header) {
  const auto universe = profile_universe(bound);
  const auto axioms = classify_all(universe, jobs);
  const std::size_t count = universe.size();
  std::vector<Tally> units(count * count, Tally(clauses.size()));
  parallel_for(units.size(), jobs, [&](std::size_t unit) {
    const std::size_t x = unit / count;
    const std::size_t y = unit % count;
    const SpaceProfile& dp = *universe[x];
    const SpaceProfile& cp = *universe[y];
    for_each_assignment(dp.size(), cp.size(), [&](const MapView::Table& assign) {
      const MapView f(dp, cp, assign);
      const PropertyVector pf = classify_map(f);
      evaluate(clauses, MapCase{f, pf, axioms[x], axioms[y]}, units[unit], header,
               [&] { return Json{{"map", map_to_json(f)}}; });
    });
  });
  return merge_units(units, clauses.size());
}

struct MapEntry {
  MapView::Table assign;
  PropertyVector properties;
};

Tally sweep_compositions(const std::vector<Clause<CompositionCase>>& clauses, int bound, int jobs,
                         const Json& header) {
  const auto universe = profile_universe(bound);
  const std::size_t count = universe.size();
  std::vector<std::vector<MapEntry>> maps(count * count);
  parallel_for(maps.size(), jobs, [&](std::size_t pair) {
    const SpaceProfile& dp = *universe[pair / count];
    const SpaceProfile& cp = *universe[pair % count];
    for_each_assignment(dp.size(), cp.size(), [&](const MapView::Table& assign) {
      maps[pair].push_back({assign, classify_map(MapView(dp, cp, assign))});
    });
  });
  std::vector<Tally> units(count * count * count, Tally(clauses.size()));
  parallel_for(units.size(), jobs, [&](std::size_t unit) {
    const std::size_t x = unit / (count * count);
    const std::size_t y = (unit / count) % count;
    const std::size_t z = unit % count;
    for (const MapEntry& fe : maps[x * count + y]) {
      const MapView f(*universe[x], *universe[y], fe.assign);
      for (const MapEntry& ge : maps[y * count + z]) {
        const MapView g(*universe[y], *universe[z], ge.assign);
        evaluate(clauses, CompositionCase{f, g, fe.properties, ge.properties}, units[unit], header,
                 [&] { return Json{{"f", map_to_json(f)}, {"g", map_to_json(g)}}; });
      }
    }
  });
  return merge_units(units, clauses.size());
}

int checked_bound(TheoremKind kind, int requested, int fallback) {
  const int bound = requested > 0 ? requested : fallback;
  const int limit = kind == TheoremKind::kSpace ? kMaxEnumerationPoints : 4;
  if (bound < 1 || bound > limit) {
    throw Error(ErrorCode::kBoundExceeded,
                "bound " + std::to_string(bound) + " outside 1.." + std::to_string(limit) +
                    (kind == TheoremKind::kSpace ? " for space sweeps" : " for map sweeps"));
  }
  return bound;
}

template <class Case>
void fill_clauses(TheoremReport& report, const std::vector<Clause<Case>>& clauses, Tally& tally) {
  report.instances = tally.instances;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    report.clauses.push_back(
        {clauses[i].name, clauses[i].role, clauses[i].text, tally.applicable[i], std::move(tally.witness[i])});
  }
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class Case>
const Clause<Case>* find_clause(const std::vector<Clause<Case>>& clauses, const std::string& name) {
  for (const auto& c : clauses) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Queries

enum class QueryLevel { kSpace, kSubset, kMap };

std::string_view to_string(QueryLevel level) {
  switch (level) {
    case QueryLevel::kSpace:
      return "space";
    case QueryLevel::kSubset:
      return "subset";
    case QueryLevel::kMap:
      return "map";
  }
  return "space";
}

std::optional<SpaceTerm> space_tag(const std::string& tag) {
  if (auto a = parse_axiom(tag)) return ax(*a);
  if (auto v = parse_variant(tag)) return var(*v);
  if (tag == "scstar-t1-pointwise") return t1_pointwise();
  if (tag == "scstar-normal-shrinking") {
    return SpaceTerm{tag, [](const SpaceCase& c) { return c.ax.scstar_normal_shrinking; }};
  }
  if (tag == "t2") return t2_classical();
  if (tag == "discrete-space") return SpaceTerm{tag, [](const SpaceCase& c) { return is_discrete(c.p); }};
  if (tag == "indiscrete-space") return SpaceTerm{tag, [](const SpaceCase& c) { return is_indiscrete(c.p); }};
  return std::nullopt;
}

QueryLevel level_of(const std::string& tag) {
  if (space_tag(tag)) return QueryLevel::kSpace;
  if (parse_set_class(tag)) return QueryLevel::kSubset;
  if (parse_map_property(tag)) return QueryLevel::kMap;
  throw Error(ErrorCode::kUnknownTag, "unknown tag '" + tag + "'");
}

QueryLevel query_level(const SearchQuery& q) {
  if (q.hypothesis.empty()) throw Error(ErrorCode::kUnknownTag, "empty hypothesis");
  const QueryLevel level = level_of(q.conclusion);
  for (const auto& tag : q.hypothesis) {
    if (level_of(tag) != level) {
      throw Error(ErrorCode::kUnknownTag, "tag '" + tag + "' is a " + std::string(to_string(level_of(tag))) +
                                              " tag but '" + q.conclusion + "' is a " +
                                              std::string(to_string(level)) + " tag");
    }
  }
  return level;
}

Clause<SpaceCase> space_query_clause(const SearchQuery& q) {
  std::vector<SpaceTerm> hyps;
  for (const auto& tag : q.hypothesis) hyps.push_back(*space_tag(tag));
  return arrow(std::move(hyps), *space_tag(q.conclusion));
}

Clause<MapCase> map_query_clause(const SearchQuery& q) {
  std::vector<MapTerm> hyps;
  for (const auto& tag : q.hypothesis) hyps.push_back(prop(*parse_map_property(tag)));
  return arrow(std::move(hyps), prop(*parse_map_property(q.conclusion)));
}

// Subset-level queries count (space, subset) pairs; the case carries the
// subset through a one-off Term built per subset.
struct SubsetQuery {
  std::vector<SetClass> hyps;
  SetClass concl;
  std::string name;
  Json hyp_names;

  explicit SubsetQuery(const SearchQuery& q) : concl(*parse_set_class(q.conclusion)), hyp_names(Json::array()) {
    for (const auto& tag : q.hypothesis) {
      hyps.push_back(*parse_set_class(tag));
      hyp_names.push_back(tag);
      name += (name.empty() ? "" : " & ") + tag;
    }
    name += " => " + q.conclusion;
  }

  Check check(const SpaceProfile& p, Subset a) const {
    Check out;
    const ClassVector cv = p.classes(a);
    for (SetClass h : hyps) {
      if (!cv[h]) return out;
    }
    out.applicable = true;
    if (!cv[concl]) {
      out.holds = false;
      out.detail = {{"hypotheses", hyp_names}, {"conclusion", std::string(to_string(concl))}, {"violation", false}};
    }
    return out;
  }
};

Json query_header(const SearchQuery& q, QueryLevel level) {
  return {{"query", {{"from", q.hypothesis}, {"to", q.conclusion}, {"level", std::string(to_string(level))}}}};
}

}  // namespace

// ---------------------------------------------------------------------------

bool TheoremReport::verified() const { return counterexample() == nullptr; }

const ClauseReport* TheoremReport::counterexample() const {
  for (const auto& c : clauses) {
    if (c.role == ClauseRole::kStatement && c.witness) return &c;
  }
  return nullptr;
}

Json TheoremReport::to_json() const {
  Json doc;
  doc["id"] = id;
  doc["bound"] = bound;
  doc["verdict"] = verified() ? "verified" : "counterexample";
  doc["instances"] = instances;
  if (timing) doc["seconds"] = seconds;
  doc["formalization"] = formalization;
  Json list = Json::array();
  for (const auto& c : clauses) {
    Json entry;
    entry["name"] = c.name;
    if (!c.text.empty()) entry["text"] = c.text;
    entry["role"] = c.role == ClauseRole::kStatement ? "statement" : "monitor";
    entry["applicable"] = c.applicable;
    entry["holds"] = !c.witness.has_value();
    if (c.witness) entry["witness"] = *c.witness;
    list.push_back(std::move(entry));
  }
  doc["clauses"] = std::move(list);
  if (const ClauseReport* c = counterexample()) doc["witness"] = *c->witness;
  return doc;
}

const std::vector<TheoremInfo>& theorem_registry() { return registry(); }

const TheoremInfo& theorem_info(std::string_view id) {
  for (const auto& info : registry()) {
    if (info.id == id) return info;
  }
  throw Error(ErrorCode::kUnknownTheorem, "unknown theorem '" + std::string(id) + "'");
}

TheoremReport verify_theorem(std::string_view id, const SweepOptions& options) {
  const TheoremInfo& info = theorem_info(id);
  const int bound = checked_bound(info.kind, options.points, info.default_bound);
  const auto start = std::chrono::steady_clock::now();
  Theorem t = make_theorem(info, options);
  const Json header = {{"theorem", info.id}};
  TheoremReport report;
  report.id = info.id;
  report.bound = bound;
  report.formalization = t.formalization;
  report.timing = options.timing;
  switch (info.kind) {
    case TheoremKind::kSpace: {
      Tally tally = sweep_spaces(t.space, bound, options.jobs, header);
      fill_clauses(report, t.space, tally);
      break;
    }
    case TheoremKind::kMap: {
      Tally tally = sweep_maps(t.map, bound, options.jobs, header);
      fill_clauses(report, t.map, tally);
      break;
    }
    case TheoremKind::kComposition: {
      Tally tally = sweep_compositions(t.composition, bound, options.jobs, header);
      fill_clauses(report, t.composition, tally);
      break;
    }
  }
  report.seconds = elapsed_since(start);
  return report;
}

TheoremReport check_implication(const SearchQuery& query, const SweepOptions& options) {
  const QueryLevel level = query_level(query);
  const TheoremKind kind = level == QueryLevel::kMap ? TheoremKind::kMap : TheoremKind::kSpace;
  const int bound = checked_bound(kind, query.points > 0 ? query.points : options.points, 0);
  const auto start = std::chrono::steady_clock::now();
  const Json header = query_header(query, level);
  TheoremReport report;
  report.bound = bound;
  report.timing = options.timing;
  report.formalization = {"level: " + std::string(to_string(level))};
  switch (level) {
    case QueryLevel::kSpace: {
      const std::vector<Clause<SpaceCase>> clauses = {space_query_clause(query)};
      Tally tally = sweep_spaces(clauses, bound, options.jobs, header);
      fill_clauses(report, clauses, tally);
      break;
    }
    case QueryLevel::kMap: {
      const std::vector<Clause<MapCase>> clauses = {map_query_clause(query)};
      Tally tally = sweep_maps(clauses, bound, options.jobs, header);
      fill_clauses(report, clauses, tally);
      break;
    }
    case QueryLevel::kSubset: {
      const SubsetQuery q(query);
      const auto universe = profile_universe(bound);
      std::vector<Tally> units(universe.size(), Tally(1));
      parallel_for(universe.size(), options.jobs, [&](std::size_t i) {
        const SpaceProfile& p = *universe[i];
        for_each_subset(p.size(), [&](Subset a) {
          Tally& tally = units[i];
          ++tally.instances;
          Check r = q.check(p, a);
          if (r.applicable) ++tally.applicable[0];
          if (!r.holds && !tally.witness[0]) {
            Json w = header;
            w["clause"] = q.name;
            w["instance"] = {{"space", space_to_json(p.space())}, {"set", labels_json(p.space(), a)}};
            w["detail"] = std::move(r.detail);
            tally.witness[0] = std::move(w);
          }
        });
      });
      Tally tally = merge_units(units, 1);
      report.instances = tally.instances;
      report.clauses.push_back({q.name, ClauseRole::kStatement, {}, tally.applicable[0], std::move(tally.witness[0])});
      break;
    }
  }
  report.id = report.clauses.front().name;
  report.seconds = elapsed_since(start);
  return report;
}

ReplayResult replay_witness(const Json& witness, const SweepOptions& options) {
  if (!witness.is_object() || !witness.contains("clause") || !witness.contains("instance")) {
    throw Error(ErrorCode::kMalformedDocument, "a witness needs 'clause' and 'instance'");
  }
  const std::string clause_name = witness["clause"].get<std::string>();
  const Json& instance = witness["instance"];
  const Json expected = witness.contains("detail") ? witness["detail"] : Json();

  ReplayResult result;
  result.clause = clause_name;
  auto finish = [&](const Check& r) {
    if (!r.holds) result.detail = r.detail;
    result.reproduced = !r.holds && r.detail == expected;
    return result;
  };

  auto replay_space = [&](const Clause<SpaceCase>& clause) {
    const SpaceProfile p(parse_space(instance.at("space")));
    const AxiomVector ax = classify_space(p);
    return finish(clause.check(SpaceCase{p, ax}));
  };
  auto replay_map = [&](const Clause<MapCase>& clause) {
    const FiniteMap f = parse_map(instance.at("map"));
    const PropertyVector pf = classify_map(f);
    const AxiomVector dom = classify_space(f.domain());
    const AxiomVector cod = classify_space(f.codomain());
    return finish(clause.check(MapCase{f, pf, dom, cod}));
  };
  auto missing = [&]() -> ReplayResult {
    throw Error(ErrorCode::kMalformedDocument, "no clause named '" + clause_name + "'");
  };

  if (witness.contains("query")) {
    const Json& q = witness["query"];
    SearchQuery query{q.at("from").get<std::vector<std::string>>(), q.at("to").get<std::string>(), 0};
    switch (query_level(query)) {
      case QueryLevel::kSpace:
        return replay_space(space_query_clause(query));
      case QueryLevel::kMap:
        return replay_map(map_query_clause(query));
      case QueryLevel::kSubset: {
        const SubsetQuery sq(query);
        const Space space = parse_space(instance.at("space"));
        const SpaceProfile p(space);
        Mask bits = 0;
        for (const auto& l : instance.at("set")) {
          auto i = space.index_of(l.get<std::string>());
          if (!i) throw Error(ErrorCode::kUnknownLabel, "unknown point label '" + l.get<std::string>() + "'");
          bits |= Mask{1} << *i;
        }
        return finish(sq.check(p, Subset(bits, space.size())));
      }
    }
  }

  if (!witness.contains("theorem")) throw Error(ErrorCode::kMalformedDocument, "a witness needs 'theorem' or 'query'");
  const TheoremInfo& info = theorem_info(witness["theorem"].get<std::string>());
  const Theorem t = make_theorem(info, options);
  switch (info.kind) {
    case TheoremKind::kSpace:
      if (auto* c = find_clause(t.space, clause_name)) return replay_space(*c);
      return missing();
    case TheoremKind::kMap:
      if (auto* c = find_clause(t.map, clause_name)) return replay_map(*c);
      return missing();
    case TheoremKind::kComposition: {
      const auto* c = find_clause(t.composition, clause_name);
      if (!c) return missing();
      const FiniteMap f = parse_map(instance.at("f"));
      const FiniteMap g = parse_map(instance.at("g"));
      const PropertyVector pf = classify_map(f);
      const PropertyVector pg = classify_map(g);
      return finish(c->check(CompositionCase{f, g, pf, pg}));
    }
  }
  return missing();
}

}  // namespace topolab
