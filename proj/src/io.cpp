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

#include "topolab/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace topolab {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kMalformedDocument, what); }

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) malformed(std::string("missing field '") + key + "'");
  return doc.at(key);
}

Subset subset_from_labels(const Space& space, const std::vector<std::string>& labels, const Json& raw) {
  Mask bits = 0;
  for (const auto& l : labels) {
    auto i = space.index_of(l);
    if (!i) throw Error(ErrorCode::kUnknownLabel, "unknown point label '" + l + "' in " + raw.dump());
    bits |= Mask{1} << *i;
  }
  return Subset(bits, space.size());
}

}  // namespace

Space parse_space(const Json& doc) {
  const Json& points = member(doc, "points");
  const Json& opens = member(doc, "opens");
  if (!points.is_array() || !opens.is_array()) malformed("'points' and 'opens' must be arrays");
  std::vector<std::string> labels;
  for (const auto& p : points) {
    if (!p.is_string()) malformed("point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) malformed("'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  const int n = static_cast<int>(labels.size());
  if (n < 1 || n > kMaxPoints) {
    throw Error(ErrorCode::kBadPointCount, "point count " + std::to_string(n) + " outside 1.." +
                                               std::to_string(kMaxPoints));
  }
  // A throwaway discrete space resolves labels (and rejects duplicates)
  // before the real family is validated.
  std::vector<Subset> all;
  for_each_subset(n, [&](Subset s) { all.push_back(s); });
  const Space lookup = validate_topology(n, all, labels);
  std::vector<Subset> family;
  for (const auto& o : opens) {
    if (!o.is_array()) malformed("each open set must be an array of labels");
    std::vector<std::string> members;
    for (const auto& l : o) {
      if (!l.is_string()) malformed("open set members must be labels");
      members.push_back(l.get<std::string>());
    }
    family.push_back(subset_from_labels(lookup, members, o));
  }
  return validate_topology(n, std::move(family), std::move(labels), std::move(name));
}

Json space_to_json(const Space& space) {
  Json doc;
  doc["name"] = space.name();
  doc["points"] = space.labels();
  Json opens = Json::array();
  for (Subset u : space.opens()) {
    Json members = Json::array();
    for_each_point(u, [&](int p) { members.push_back(space.label(p)); });
    opens.push_back(std::move(members));
  }
  doc["opens"] = std::move(opens);
  return doc;
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    malformed("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

Space load_space(const std::filesystem::path& path) { return parse_space(load_json(path)); }

Subset parse_subset(const Space& space, std::string_view labels) {
  Mask bits = 0;
  std::size_t start = 0;
  while (!labels.empty() && start <= labels.size()) {
    std::size_t end = labels.find(',', start);
    if (end == std::string_view::npos) end = labels.size();
    std::string_view label = labels.substr(start, end - start);
    auto i = space.index_of(label);
    if (!i) throw Error(ErrorCode::kUnknownLabel, "unknown point label '" + std::string(label) + "'");
    bits |= Mask{1} << *i;
    start = end + 1;
  }
  return Subset(bits, space.size());
}

FiniteMap parse_map(const Json& doc, const std::filesystem::path& base_dir) {
  auto side = [&](const char* key) {
    const Json& ref = member(doc, key);
    if (ref.is_string()) return load_space(base_dir / ref.get<std::string>());
    return parse_space(ref);
  };
  Space domain = side("domain");
  Space codomain = side("codomain");
  const Json& table_json = member(doc, "map");
  if (!table_json.is_object()) malformed("'map' must be an object from domain labels to codomain labels");
  std::map<std::string, std::string> table;
  for (const auto& [from, to] : table_json.items()) {
    if (!to.is_string()) malformed("map values must be codomain labels");
    table[from] = to.get<std::string>();
  }
  return validate_map(domain, codomain, table);
}

Json map_to_json(const MapView& f) {
  Json doc;
  doc["domain"] = space_to_json(f.domain().space());
  doc["codomain"] = space_to_json(f.codomain().space());
  Json table;
  for (int x = 0; x < f.domain().size(); ++x) table[f.domain().space().label(x)] = f.codomain().space().label(f(x));
  doc["map"] = std::move(table);
  return doc;
}

FiniteMap load_map(const std::filesystem::path& path) { return parse_map(load_json(path), path.parent_path()); }

}  // namespace topolab
