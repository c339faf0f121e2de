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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polyhardy/report.hpp"
#include "polyhardy/submodule.hpp"

namespace polyhardy {

struct CheckOptions {
  int N = 0;            // 0: use the spec's truncation
  int guard = -1;       // <0: default guard for the spec
  double tol = 1e-8;
  std::uint64_t seed = 42;
  int max_iter = 200;
  double floor = 0.01;  // separation floor for the non-vanishing direction
  std::size_t dense_recheck_cap = 1024;
  double divisibility_tol = 1e-8;
  bool timing = false;
};

std::vector<std::string> catalog_ids();
// Catalog ids followed by the characterization check names.
std::vector<std::string> all_check_names();

Report check_identity(const std::string& id, const SubmoduleSpec& spec, const CheckOptions& o);
Report check_one_variable_beurling(const SubmoduleSpec& spec, int i, const CheckOptions& o);
Report check_sum_characterization(const SubmoduleSpec& spec, const std::vector<int>& lambda,
                                  const CheckOptions& o);
Report check_defect_commuting(const SubmoduleSpec& spec, int i, int j, const CheckOptions& o);
Report check_projection_commuting(const SubmoduleSpec& phi, const SubmoduleSpec& psi,
                                  const CheckOptions& o);
Report check_finite_rank_product(const SubmoduleSpec& phi, const SubmoduleSpec& psi,
                                 const CheckOptions& o);
Report check_partial_isometry(const SubmoduleSpec& spec, int lambda, const CheckOptions& o);
Report check_wandering_nonorthogonality(const SubmoduleSpec& spec, const CheckOptions& o);
Report reproduce_section4(double alpha, const CheckOptions& o);

// Runs the named checks ("all" expands) on every spec and spec pair;
// reports come back sorted by check id.
std::vector<Report> run_checks(const std::vector<SubmoduleSpec>& specs,
                               const std::vector<std::string>& checks, const CheckOptions& o);

}  // namespace polyhardy
