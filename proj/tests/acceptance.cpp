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

// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "topolab/enumerate.hpp"
#include "topolab/gen_sets.hpp"
#include "topolab/io.hpp"
#include "topolab/operators.hpp"
#include "topolab/profile.hpp"
#include "topolab/report.hpp"
#include "topolab/separation.hpp"
#include "topolab/theorems.hpp"

namespace {

using namespace topolab;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string note;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.pass) {
    o.pass = false;
    o.note = what;
  }
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Subset labels(const Space& s, const std::string& chars) {
  Mask bits = 0;
  for (char c : chars) bits |= Mask{1} << *s.index_of(std::string(1, c));
  return Subset(bits, s.size());
}

std::vector<Subset> sorted_sets(const Space& s, const std::vector<std::string>& lists) {
  std::vector<Subset> out;
  for (const auto& l : lists) out.push_back(labels(s, l));
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) { return a.bits() < b.bits(); });
  return out;
}

std::vector<Subset> literal_family(const Space& s, auto&& pred) {
  std::vector<Subset> out;
  for_each_subset(s.size(), [&](Subset a) {
    if (pred(a)) out.push_back(a);
  });
  return out;
}

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(TOPOLAB_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 1 << 14> buf;
  while (std::size_t k = std::fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), k);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

// Every witness in the report (statements and monitors) must replay.
void check_replayable(Outcome& o, const TheoremReport& r) {
  for (const auto& c : r.clauses) {
    if (!c.witness) continue;
    const ReplayResult replay = replay_witness(*c.witness);
    require(o, replay.reproduced, r.id + " witness for '" + c.name + "' does not replay");
  }
}

Outcome example_1_8() {
  Outcome o;
  const auto t0 = Clock::now();
  const Space s = fixture_space("example-1.8");
  const SpaceProfile p(s);
  const auto closed = sorted_sets(s, {"", "n", "ln", "mn", "kmn", "lmn", "klmn"});
  const auto g_closed = sorted_sets(s, {"", "n", "kn", "ln", "kln", "mn", "kmn", "lmn", "klmn"});
  const auto all = literal_family(s, [](Subset) { return true; });
  require(o, p.family(SetClass::kClosed) == closed, "closed list");
  require(o, literal_family(s, [&](Subset a) { return s.is_closed(a); }) == closed, "closed list (literal)");
  require(o, p.family(SetClass::kGClosed) == g_closed, "g-closed list");
  require(o, literal_family(s, [&](Subset a) { return generalized_class(s, a, GenClass::kGClosed); }) == g_closed,
          "g-closed list (literal)");
  for (GenClass c : {GenClass::kScstarClosed, GenClass::kGscstarClosed, GenClass::kScstargClosed}) {
    require(o, p.family(to_set_class(c)) == all, std::string(to_string(c)) + " list");
    require(o, literal_family(s, [&](Subset a) { return generalized_class(s, a, c); }) == all,
            std::string(to_string(c)) + " list (literal)");
  }
  require(o, since(t0) < 1.0, "over 1 s");
  return o;
}

Outcome example_2_9() {
  Outcome o;
  const auto t0 = Clock::now();
  const Space s = fixture_space("example-2.9");
  const SpaceProfile p(s);
  require(o, axiom(p, Axiom::kRegular), "regular should be true");
  require(o, !axiom(p, Axiom::kStronglyRgRegular), "strongly-rg-regular should be false");
  require(o, generalized_class(s, labels(s, "l"), GenClass::kRgClosed), "{l} should be rg-closed");
  require(o, since(t0) < 1.0, "over 1 s");
  return o;
}

Outcome enumeration() {
  Outcome o;
  const std::size_t expected[] = {1, 4, 29, 355};
  for (int n = 1; n <= 4; ++n) {
    const auto t0 = Clock::now();
    const auto a = enumerate_topologies(n, false, EnumerationRoute::kFamilyFilter);
    const auto b = enumerate_topologies(n, false, EnumerationRoute::kPreorder);
    const double secs = since(t0);
    require(o, a.size() == expected[n - 1], "family-filter count at n=" + std::to_string(n));
    require(o, b.size() == expected[n - 1], "preorder count at n=" + std::to_string(n));
    require(o, a == b, "routes differ at n=" + std::to_string(n));
    if (n == 4) require(o, secs < 10.0, "n=4 over 10 s");
  }
  return o;
}

Outcome t2_10() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto r = verify_theorem("T2.10");
  require(o, r.instances == 389, "expected 389 spaces");
  check_replayable(o, r);
  require(o, since(t0) < 120.0, "over 120 s");
  o.note = o.pass ? std::string("verdict ") + (r.verified() ? "verified" : "counterexample") : o.note;
  return o;
}

Outcome space_sweeps() {
  Outcome o;
  const auto t0 = Clock::now();
  std::string verdicts;
  for (const char* id : {"T2.11", "T2.13", "T2.14"}) {
    const auto r = verify_theorem(id);
    require(o, r.instances == 389, std::string(id) + " expected 389 spaces");
    check_replayable(o, r);
    verdicts += std::string(verdicts.empty() ? "" : ", ") + id + " " + (r.verified() ? "verified" : "counterexample");
  }
  require(o, since(t0) < 300.0, "over 300 s");
  if (o.pass) o.note = verdicts;
  return o;
}

Outcome map_sweeps() {
  Outcome o;
  const auto t0 = Clock::now();
  int verified = 0, found = 0;
  for (const char* id : {"T3.3", "T3.5", "T3.7", "T4.5", "P4.8", "P4.10", "T4.14", "T4.16", "T5.1", "T5.3",
                         "T5.7"}) {
    const auto r = verify_theorem(id);
    require(o, r.instances == 24872, std::string(id) + " expected 24872 maps");
    check_replayable(o, r);
    (r.verified() ? verified : found)++;
  }
  require(o, since(t0) < 600.0, "over 10 min");
  if (o.pass) o.note = std::to_string(verified) + " verified, " + std::to_string(found) + " with counterexamples";
  return o;
}

Outcome operator_laws() {
  Outcome o;
  using Op = Subset (SpaceProfile::*)(Subset) const;
  struct Pair {
    const char* name;
    Op cl;
    Op in;
  };
  const Pair ops[] = {
      {"cl", &SpaceProfile::closure, &SpaceProfile::interior},
      {"s-cl", &SpaceProfile::semi_closure, &SpaceProfile::semi_interior},
      {"c*-cl", &SpaceProfile::cstar_closure, &SpaceProfile::cstar_interior},
      {"SC*-cl", &SpaceProfile::scstar_closure, &SpaceProfile::scstar_interior},
  };
  long violations = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const Space& s : enumerate_topologies(n)) {
      const SpaceProfile p(s);
      for (const Pair& op : ops) {
        for_each_subset(n, [&](Subset a) {
          const Subset c = (p.*op.cl)(a);
          const Subset i = (p.*op.in)(a);
          violations += !a.is_subset_of(c);
          violations += (p.*op.cl)(c) != c;
          violations += !i.is_subset_of(a);
          violations += (p.*op.in)(i) != i;
          violations += i != (p.*op.cl)(a.complement()).complement();
          for_each_superset(a, [&](Subset b) {
            violations += !c.is_subset_of((p.*op.cl)(b));
            violations += !i.is_subset_of((p.*op.in)(b));
          });
        });
      }
    }
  }
  require(o, violations == 0, std::to_string(violations) + " violations");
  return o;
}

bool scan_regular(const Space& s) {
  const Mask full = s.full().bits();
  for (Subset u : s.opens()) {
    const Mask f = full & ~u.bits();
    for (int x = 0; x < s.size(); ++x) {
      if (f >> x & 1) continue;
      bool found = false;
      for (Subset a : s.opens()) {
        for (Subset b : s.opens()) {
          if ((a.bits() >> x & 1) && (b.bits() & f) == f && (a.bits() & b.bits()) == 0) found = true;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

Outcome discrepancy() {
  Outcome o;
  const auto report = paper_report();
  const Run run = cli("paper-report --format json");
  require(o, run.status == (report.any_disagreement() ? 1 : 0), "exit status does not track disagreements");
  bool seen = false;
  for (const auto& row : report.rows) {
    if (row.fixture == "example-2.8" && row.claim == "regular") {
      seen = true;
      require(o, row.engine == scan_regular(fixture_space("example-2.8")), "example-2.8 row differs from the scan");
    }
  }
  require(o, seen, "no example-2.8 regularity row");
  int disagreements = 0;
  for (const auto& row : report.rows) disagreements += row.kind == RowKind::kClaim && !row.agree;
  if (o.pass) o.note = std::to_string(disagreements) + " disagreeing claims, exit " + std::to_string(run.status);
  return o;
}

Outcome determinism() {
  Outcome o;
  const Run a = cli("verify --theorem all --format json --jobs 1");
  const Run b = cli("verify --theorem all --format json --jobs 1");
  const Run c = cli("verify --theorem all --format json --jobs 4");
  const Run r1 = cli("paper-report --format json");
  const Run r2 = cli("paper-report --format json");
  require(o, !a.out.empty() && a.status >= 0 && a.status <= 1, "verify run failed");
  require(o, a.out == b.out, "verify output differs between runs");
  require(o, a.out == c.out, "verify output differs between worker counts");
  require(o, !r1.out.empty() && r1.out == r2.out, "paper-report output differs between runs");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 example-1.8 golden lists", example_1_8},
      {"2 example-2.9 golden values", example_2_9},
      {"3 enumeration counts", enumeration},
      {"4 T2.10 sweep", t2_10},
      {"5 T2.11/T2.13/T2.14 sweeps", space_sweeps},
      {"6 map theorem sweeps", map_sweeps},
      {"7 operator laws n<=3", operator_laws},
      {"8 discrepancy detection", discrepancy},
      {"9 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    failed += !o.pass;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", since(t0));
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << secs << ")";
    if (!o.note.empty()) std::cout << ": " << o.note;
    std::cout << '\n';
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
