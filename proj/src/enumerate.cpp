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

#include "topolab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace topolab {

namespace {

std::vector<Space> by_family_filter(int n) {
  const Mask full = full_mask(n);
  std::vector<Mask> middle;
  for (Mask m = 1; m < full; ++m) middle.push_back(m);
  std::vector<Space> out;
  const std::uint64_t families = std::uint64_t{1} << middle.size();
  std::vector<bool> member(std::size_t{1} << n);
  std::vector<Mask> chosen;
  for (std::uint64_t pick = 0; pick < families; ++pick) {
    std::fill(member.begin(), member.end(), false);
    chosen.assign({0, full});
    member[0] = member[full] = true;
    for (std::size_t i = 0; i < middle.size(); ++i) {
      if ((pick >> i) & 1U) {
        chosen.push_back(middle[i]);
        member[middle[i]] = true;
      }
    }
    bool topology = true;
    for (std::size_t i = 0; topology && i < chosen.size(); ++i) {
      for (std::size_t j = i + 1; j < chosen.size(); ++j) {
        if (!member[chosen[i] | chosen[j]] || !member[chosen[i] & chosen[j]]) {
          topology = false;
          break;
        }
      }
    }
    if (!topology) continue;
    std::vector<Subset> opens;
    for (Mask m : chosen) opens.emplace_back(m, n);
    out.push_back(validate_topology(n, std::move(opens)));
  }
  return out;
}

std::vector<Space> by_preorder(int n) {
  std::vector<std::pair<int, int>> off_diagonal;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) off_diagonal.emplace_back(i, j);
    }
  }
  std::vector<Space> out;
  const std::uint64_t relations = std::uint64_t{1} << off_diagonal.size();
  std::array<Mask, kMaxEnumerationPoints> above{};  // above[i]: points j with i <= j
  for (std::uint64_t pick = 0; pick < relations; ++pick) {
    for (int i = 0; i < n; ++i) above[i] = Mask{1} << i;
    for (std::size_t b = 0; b < off_diagonal.size(); ++b) {
      if ((pick >> b) & 1U) above[off_diagonal[b].first] |= Mask{1} << off_diagonal[b].second;
    }
    bool transitive = true;
    for (int i = 0; transitive && i < n; ++i) {
      for_each_point(Subset(above[i], n), [&](int j) {
        if ((above[j] & ~above[i]) != 0) transitive = false;
      });
    }
    if (!transitive) continue;
    // Opens are the up-closed sets of the preorder.
    std::vector<Subset> opens;
    for_each_subset(n, [&](Subset u) {
      bool up_closed = true;
      for_each_point(u, [&](int i) {
        if ((above[i] & ~u.bits()) != 0) up_closed = false;
      });
      if (up_closed) opens.push_back(u);
    });
    out.push_back(validate_topology(n, std::move(opens)));
  }
  return out;
}

CanonicalForm encode(const Space& space) {
  CanonicalForm form{space.size(), {}};
  for (Subset u : space.opens()) form.opens.push_back(u.bits());
  return form;
}

}  // namespace

std::vector<Space> enumerate_topologies(int n, bool up_to_homeo, EnumerationRoute route) {
  if (n < 1 || n > kMaxEnumerationPoints) {
    throw Error(ErrorCode::kBoundExceeded, "enumeration supports 1.." + std::to_string(kMaxEnumerationPoints) +
                                               " points, got " + std::to_string(n));
  }
  if (route == EnumerationRoute::kFamilyFilter && n > 4) {
    throw Error(ErrorCode::kBoundExceeded, "the family filter route supports at most 4 points");
  }
  std::vector<Space> spaces = route == EnumerationRoute::kFamilyFilter ? by_family_filter(n) : by_preorder(n);
  std::sort(spaces.begin(), spaces.end(), [](const Space& a, const Space& b) { return a.opens() < b.opens(); });
  if (!up_to_homeo) return spaces;

  std::map<CanonicalForm, int> forms;
  for (const Space& s : spaces) forms.emplace(canonical_form(s), 0);
  std::vector<Space> out;
  out.reserve(forms.size());
  for (const auto& [form, unused] : forms) out.push_back(space_from_form(form));
  return out;
}

Space permute(const Space& space, std::span<const int> perm) {
  const int n = space.size();
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[perm[i]] = space.label(i);
  std::vector<Subset> opens;
  for (Subset u : space.opens()) {
    Mask m = 0;
    for_each_point(u, [&](int p) { m |= Mask{1} << perm[p]; });
    opens.emplace_back(m, n);
  }
  return validate_topology(n, std::move(opens), std::move(labels), space.name());
}

CanonicalForm canonical_form(const Space& space) {
  const int n = space.size();
  if (n > 8) throw Error(ErrorCode::kBoundExceeded, "canonical form supports at most 8 points");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best = encode(space);
  std::vector<Mask> image(space.opens().size());
  do {
    for (std::size_t k = 0; k < space.opens().size(); ++k) {
      Mask m = 0;
      for_each_point(space.opens()[k], [&](int p) { m |= Mask{1} << perm[p]; });
      image[k] = m;
    }
    std::sort(image.begin(), image.end());
    if (image < best.opens) best.opens = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Space space_from_form(const CanonicalForm& form) {
  std::vector<Subset> opens;
  for (Mask m : form.opens) opens.emplace_back(m, form.points);
  return validate_topology(form.points, std::move(opens));
}

std::vector<FiniteMap> enumerate_maps(const std::shared_ptr<const SpaceProfile>& domain,
                                      const std::shared_ptr<const SpaceProfile>& codomain,
                                      std::span<const MapProperty> filters) {
  const int n = domain->size();
  const int m = codomain->size();
  if (n > 4 || m > 4) throw Error(ErrorCode::kBoundExceeded, "map enumeration supports at most 4 points per side");
  std::vector<FiniteMap> out;
  std::vector<int> assign(n, 0);
  while (true) {
    FiniteMap f(domain, codomain, assign);
    if (std::all_of(filters.begin(), filters.end(), [&](MapProperty p) { return map_property(f, p); })) {
      out.push_back(std::move(f));
    }
    // Odometer with point 0 as the most significant digit.
    int digit = n - 1;
    while (digit >= 0 && ++assign[digit] == m) assign[digit--] = 0;
    if (digit < 0) break;
  }
  return out;
}

std::vector<std::shared_ptr<const SpaceProfile>> profile_universe(int max_points) {
  std::vector<std::shared_ptr<const SpaceProfile>> out;
  for (int n = 1; n <= max_points; ++n) {
    for (Space& s : enumerate_topologies(n)) out.push_back(std::make_shared<const SpaceProfile>(std::move(s)));
  }
  return out;
}

}  // namespace topolab
