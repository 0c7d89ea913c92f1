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

#ifndef TOPOLAB_IO_HPP
#define TOPOLAB_IO_HPP

#include <filesystem>
#include <string_view>

#include "json.hpp"
#include "topolab/maps.hpp"
#include "topolab/space.hpp"

namespace topolab {

using Json = nlohmann::ordered_json;

// Space document:
//   {"name": "...", "points": ["k","l",...], "opens": [[], ["k"], ...]}
// `points` fixes the index order. Unknown labels, duplicate points and
// non-topologies are rejected with topolab::Error.

Space parse_space(const Json& doc);
Json space_to_json(const Space& space);
Space load_space(const std::filesystem::path& path);

/// Reads a JSON file; kMalformedDocument on I/O or syntax errors.
Json load_json(const std::filesystem::path& path);

/// Comma-separated labels ("k,m"); the empty string is the empty set.
Subset parse_subset(const Space& space, std::string_view labels);

// Map document:
//   {"domain": <space doc | "file.json">, "codomain": <...>, "map": {"k": "a", ...}}
// File references resolve relative to `base_dir`.

FiniteMap parse_map(const Json& doc, const std::filesystem::path& base_dir = {});
Json map_to_json(const MapView& f);
FiniteMap load_map(const std::filesystem::path& path);

}  // namespace topolab

#endif  // TOPOLAB_IO_HPP
