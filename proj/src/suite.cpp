// Copyright 2026 The polyhardy authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <set>

#include "polyhardy/verify.hpp"

namespace polyhardy {

namespace {

const std::vector<std::string> kCharacterizations = {
    "one_variable_beurling", "sum_characterization", "defect_commuting",
    "partial_isometry",      "wandering_nonorthogonality", "projection_commuting",
    "finite_rank_product",   "section4"};

bool covers(const SubmoduleSpec& a, const SubmoduleSpec& b) {
  std::set<int> v;
  for (const auto& kv : a.generators) v.insert(kv.first);
  for (const auto& kv : b.generators) v.insert(kv.first);
  return static_cast<int>(v.size()) == a.n;
}

}  // namespace

std::vector<std::string> all_check_names() {
  std::vector<std::string> out = catalog_ids();
  out.insert(out.end(), kCharacterizations.begin(), kCharacterizations.end());
  return out;
}

std::vector<Report> run_checks(const std::vector<SubmoduleSpec>& specs,
                               const std::vector<std::string>& checks, const CheckOptions& o) {
  const std::vector<std::string> known = all_check_names();
  bool all = false;
  std::set<std::string> want;
  for (const auto& c : checks) {
    if (c == "all") {
      all = true;
    } else if (std::find(known.begin(), known.end(), c) == known.end()) {
      throw Error(ErrorCode::unknown_check, "unknown check id \"" + c + "\"");
    } else {
      want.insert(c);
    }
  }
  auto on = [&](const std::string& id) { return all || want.count(id) > 0; };
  const bool multi = specs.size() > 1;
  std::vector<Report> out;
  auto push = [&](Report r, const std::string& prefix) {
    if (multi) r.check_id = prefix + r.check_id;
    out.push_back(std::move(r));
  };

  for (std::size_t k = 0; k < specs.size(); ++k) {
    const SubmoduleSpec& s = specs[k];
    const std::string pre = "spec" + std::to_string(k) + ":";
    const bool sum = s.kind == SubmoduleKind::inner_sum;
    for (const auto& id : catalog_ids())
      if (on(id)) push(check_identity(id, s, o), pre);
    if (want.count("one_variable_beurling")) {
      for (int i = 1; i <= s.n; ++i) push(check_one_variable_beurling(s, i, o), pre);
    } else if (all && s.generators.size() == 1) {
      push(check_one_variable_beurling(s, s.generators.begin()->first, o), pre);
    }
    if (want.count("sum_characterization") || (all && sum))
      push(check_sum_characterization(s, s.lambda(), o), pre);
    if (on("defect_commuting") && sum) {
      const auto lam = s.lambda();
      for (std::size_t a = 0; a < lam.size(); ++a)
        for (std::size_t b = a + 1; b < lam.size(); ++b)
          push(check_defect_commuting(s, lam[a], lam[b], o), pre);
    }
    if (on("partial_isometry") && sum)
      for (int l : s.lambda()) push(check_partial_isometry(s, l, o), pre);
    if (on("wandering_nonorthogonality")) push(check_wandering_nonorthogonality(s, o), pre);
  }

  for (std::size_t a = 0; a < specs.size(); ++a)
    for (std::size_t b = a + 1; b < specs.size(); ++b) {
      const SubmoduleSpec &x = specs[a], &y = specs[b];
      if (x.kind != SubmoduleKind::inner_sum || y.kind != SubmoduleKind::inner_sum || x.n != y.n)
        continue;
      const std::string pre = "spec" + std::to_string(a) + "," + std::to_string(b) + ":";
      if (on("projection_commuting")) push(check_projection_commuting(x, y, o), pre);
      if (on("finite_rank_product") && covers(x, y)) push(check_finite_rank_product(x, y, o), pre);
    }

  if (want.count("section4")) push(reproduce_section4(0.5, o), "");

  std::stable_sort(out.begin(), out.end(),
                   [](const Report& p, const Report& q) { return p.check_id < q.check_id; });
  return out;
}

}  // namespace polyhardy
