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

// topolab: command-line driver for the finite topology engine.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "topolab/enumerate.hpp"
#include "topolab/io.hpp"
#include "topolab/report.hpp"
#include "topolab/separation.hpp"
#include "topolab/theorems.hpp"

namespace {

using topolab::Json;

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kInputError = 2;

struct Options {
  std::string format = "table";
  std::string file;
  std::string set;
  std::string tag;
  int points = 0;
  bool up_to_homeo = false;
  bool count_only = false;
  std::string route = "preorder";
  std::vector<std::string> from;
  std::string to;
  std::string theorem;
  int jobs = 0;
  bool timing = false;
  std::string hausdorff = "scstar-t2";
  std::string replay;
};

bool json_out(const Options& o) { return o.format == "json"; }

void print_json(const Json& doc) { std::cout << doc.dump() << "\n"; }

topolab::SweepOptions sweep_options(const Options& o) {
  topolab::SweepOptions s;
  s.points = o.points;
  s.jobs = o.jobs;
  s.timing = o.timing;
  s.classical_hausdorff = o.hausdorff == "t2";
  return s;
}

void print_report(const topolab::TheoremReport& r, const Options& o) {
  if (json_out(o)) {
    print_json(r.to_json());
    return;
  }
  std::cout << r.id << "  bound=" << r.bound << "  " << (r.verified() ? "verified" : "counterexample")
            << "  instances=" << r.instances;
  if (r.timing) std::cout << "  seconds=" << r.seconds;
  std::cout << "\n";
  for (const auto& f : r.formalization) std::cout << "  # " << f << "\n";
  for (const auto& c : r.clauses) {
    std::cout << "  [" << (c.role == topolab::ClauseRole::kStatement ? "statement" : "monitor") << "] " << c.name;
    if (!c.text.empty()) std::cout << " " << c.text;
    std::cout << "  applicable=" << c.applicable << "  " << (c.witness ? "FAILS" : "holds") << "\n";
    if (c.witness) std::cout << "    witness: " << c.witness->dump() << "\n";
  }
}

int run_validate(const Options& o) {
  const topolab::Space s = topolab::load_space(o.file);
  if (json_out(o)) {
    print_json({{"valid", true}, {"name", s.name()}, {"points", s.size()}, {"opens", s.opens().size()}});
  } else {
    std::cout << "valid topology '" << s.name() << "': " << s.size() << " points, " << s.opens().size()
              << " open sets\n";
  }
  return kOk;
}

int run_classify_set(const Options& o) {
  const topolab::SpaceProfile p(topolab::load_space(o.file));
  const topolab::Subset a = topolab::parse_subset(p.space(), o.set);
  Json set = Json::array();
  topolab::for_each_point(a, [&](int x) { set.push_back(p.space().label(x)); });
  if (!o.tag.empty()) {
    const auto cls = topolab::parse_set_class(o.tag);
    if (!cls) throw topolab::Error(topolab::ErrorCode::kUnknownTag, "unknown set class '" + o.tag + "'");
    const bool value = p.has(a, *cls);
    if (json_out(o)) {
      print_json({{"set", set}, {"class", o.tag}, {"value", value}});
    } else {
      std::cout << (value ? "true" : "false") << "\n";
    }
    return kOk;
  }
  Json classes;
  for (int i = 0; i < topolab::kSetClassCount; ++i) {
    const auto c = static_cast<topolab::SetClass>(i);
    classes[std::string(topolab::to_string(c))] = p.has(a, c);
  }
  if (json_out(o)) {
    print_json({{"set", set}, {"classes", classes}});
  } else {
    std::cout << "set " << topolab::format_subset(p.space(), a) << "\n";
    for (const auto& [name, value] : classes.items()) std::cout << "  " << name << ": " << value.dump() << "\n";
  }
  return kOk;
}

void print_flags(const Json& doc) {
  for (const auto& [section, values] : doc.items()) {
    if (!values.is_object()) {
      std::cout << section << ": " << values.dump() << "\n";
      continue;
    }
    std::cout << section << "\n";
    for (const auto& [name, value] : values.items()) std::cout << "  " << name << ": " << value.dump() << "\n";
  }
}

int run_classify_space(const Options& o) {
  const topolab::SpaceProfile p(topolab::load_space(o.file));
  const Json doc = topolab::classify_space(p).to_json();
  if (json_out(o)) {
    print_json({{"space", p.space().name()}, {"axioms", doc}});
  } else {
    std::cout << "space '" << p.space().name() << "'\n";
    print_flags(doc);
  }
  return kOk;
}

int run_check_map(const Options& o) {
  const topolab::FiniteMap f = topolab::load_map(o.file);
  if (!o.tag.empty()) {
    const auto prop = topolab::parse_map_property(o.tag);
    if (!prop) throw topolab::Error(topolab::ErrorCode::kUnknownTag, "unknown map property '" + o.tag + "'");
    const bool value = topolab::map_property(f, *prop);
    if (json_out(o)) {
      print_json({{"property", o.tag}, {"value", value}});
    } else {
      std::cout << (value ? "true" : "false") << "\n";
    }
    return kOk;
  }
  const Json doc = topolab::classify_map(f).to_json();
  if (json_out(o)) {
    print_json({{"properties", doc}});
  } else {
    print_flags(doc);
  }
  return kOk;
}

int run_enumerate(const Options& o) {
  const auto route =
      o.route == "family-filter" ? topolab::EnumerationRoute::kFamilyFilter : topolab::EnumerationRoute::kPreorder;
  const auto spaces = topolab::enumerate_topologies(o.points, o.up_to_homeo, route);
  if (o.count_only) {
    if (json_out(o)) {
      print_json({{"points", o.points}, {"up_to_homeo", o.up_to_homeo}, {"count", spaces.size()}});
    } else {
      std::cout << spaces.size() << "\n";
    }
    return kOk;
  }
  for (const auto& s : spaces) {
    if (json_out(o)) {
      print_json(topolab::space_to_json(s));
      continue;
    }
    std::string line;
    for (const auto& u : s.opens()) line += (line.empty() ? "" : " ") + topolab::format_subset(s, u);
    std::cout << line << "\n";
  }
  return kOk;
}

int run_implication(const Options& o) {
  topolab::SearchQuery q{o.from, o.to, o.points};
  const auto report = topolab::check_implication(q, sweep_options(o));
  print_report(report, o);
  return report.verified() ? kOk : kFound;
}

int run_replay(const Options& o) {
  const auto result = topolab::replay_witness(topolab::load_json(o.replay), sweep_options(o));
  if (json_out(o)) {
    print_json({{"clause", result.clause}, {"reproduced", result.reproduced}, {"detail", result.detail}});
  } else {
    std::cout << (result.reproduced ? "reproduced" : "not reproduced") << ": " << result.clause << "\n";
    if (!result.detail.is_null()) std::cout << "  detail: " << result.detail.dump() << "\n";
  }
  return result.reproduced ? kFound : kOk;
}

int run_verify(const Options& o) {
  if (!o.replay.empty()) return run_replay(o);
  std::vector<std::string> ids;
  if (o.theorem == "all") {
    for (const auto& info : topolab::theorem_registry()) ids.push_back(info.id);
  } else {
    ids.push_back(o.theorem);
  }
  int status = kOk;
  for (const auto& id : ids) {
    const auto report = topolab::verify_theorem(id, sweep_options(o));
    print_report(report, o);
    if (!report.verified()) status = kFound;
  }
  return status;
}

int run_paper_report(const Options& o) {
  const auto report = topolab::paper_report();
  if (json_out(o)) {
    for (const auto& line : report.to_json_lines()) print_json(line);
  } else {
    std::cout << report.to_table();
  }
  return report.any_disagreement() ? kFound : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topolab: finite topological spaces, SC*-separation axioms and theorem sweeps"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };
  auto add_sweep = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--timing", o.timing, "Include wall-clock seconds in the report");
  };

  auto* validate = app.add_subcommand("validate", "Check that a space document is a topology");
  validate->add_option("space", o.file, "Space JSON file")->required();
  add_format(validate);

  auto* classify_set = app.add_subcommand("classify-set", "Set classes of one subset");
  classify_set->add_option("space", o.file, "Space JSON file")->required();
  classify_set->add_option("--set", o.set, "Comma-separated labels; \"\" is the empty set")->required();
  classify_set->add_option("--class", o.tag, "Single set class to test");
  add_format(classify_set);

  auto* classify_space = app.add_subcommand("classify-space", "Separation axioms of a space");
  classify_space->add_option("space", o.file, "Space JSON file")->required();
  add_format(classify_space);

  auto* check_map = app.add_subcommand("check-map", "Properties of a map");
  check_map->add_option("map", o.file, "Map JSON file")->required();
  check_map->add_option("--property", o.tag, "Single property to test");
  add_format(check_map);

  auto* enumerate = app.add_subcommand("enumerate", "List all topologies on n points");
  enumerate->add_option("--points", o.points, "Point count (1..5)")->required();
  enumerate->add_flag("--up-to-homeo", o.up_to_homeo, "One canonical representative per homeomorphism class");
  enumerate->add_flag("--count-only", o.count_only, "Print only the count");
  enumerate->add_option("--route", o.route, "Enumeration route")
      ->check(CLI::IsMember({"preorder", "family-filter"}));
  add_format(enumerate);

  auto* implication = app.add_subcommand("implication", "Search for a counterexample to an implication");
  implication->add_option("--from", o.from, "Hypothesis tags")->required()->delimiter(',');
  implication->add_option("--to", o.to, "Conclusion tag")->required();
  implication->add_option("--points", o.points, "Largest point count swept")->required();
  add_sweep(implication);
  add_format(implication);

  auto* verify = app.add_subcommand("verify", "Sweep a registered statement");
  auto* theorem_opt = verify->add_option("--theorem", o.theorem, "Statement id, or 'all'");
  verify->add_option("--points", o.points, "Bound (0 = the statement's default)");
  verify->add_option("--replay", o.replay, "Re-check a witness JSON file");
  verify->add_option("--hausdorff", o.hausdorff, "Reading of Hausdorff for T2.15")
      ->check(CLI::IsMember({"scstar-t2", "t2"}));
  add_sweep(verify);
  add_format(verify);

  auto* paper = app.add_subcommand("paper-report", "Compare bundled example claims with the engine");
  add_format(paper);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*validate) return run_validate(o);
    if (*classify_set) return run_classify_set(o);
    if (*classify_space) return run_classify_space(o);
    if (*check_map) return run_check_map(o);
    if (*enumerate) return run_enumerate(o);
    if (*implication) return run_implication(o);
    if (*verify) {
      if (o.replay.empty() && theorem_opt->count() == 0) {
        std::cerr << "error: verify needs --theorem or --replay\n";
        return kInputError;
      }
      return run_verify(o);
    }
    if (*paper) return run_paper_report(o);
  } catch (const topolab::Error& e) {
    std::cerr << "error: " << topolab::error_code_name(e.code()) << ": " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: MalformedDocument: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
