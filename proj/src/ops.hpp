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

#include <vector>

#include "polyhardy/submodule.hpp"

namespace polyhardy::detail {

// Operator atoms of a submodule, combined lazily.
struct Ops {
  explicit Ops(const Submodule& s);

  const Submodule& sm;
  OpExpr P, Q;
  std::vector<OpExpr> S, Sa, E0;

  OpExpr R(int i) const { return P * S[i - 1] * P; }
  OpExpr Ra(int i) const { return P * Sa[i - 1] * P; }
  OpExpr RR(int i) const { return R(i) * Ra(i); }
  OpExpr EE(int j) const { return P * E0[j - 1] * P; }
  OpExpr C(int i) const { return Q * S[i - 1] * Q; }
  OpExpr Ca(int i) const { return Q * Sa[i - 1] * Q; }
  // I_S - R_j R_j^* - E_j E_j^*
  OpExpr A(int j) const { return P - RR(j) - EE(j); }
  // [R_j^*, R_i]
  OpExpr K(int i, int j) const { return Ra(j) * R(i) - R(i) * Ra(j); }
  // [C_j, C_i^*]
  OpExpr L(int i, int j) const { return C(j) * Ca(i) - Ca(i) * C(j); }
  OpExpr D2(int j) const { return Q - Ca(j) * C(j); }
  OpExpr defect(int i) const { return P - RR(i); }
  OpExpr ev_defect(int j) const { return P - EE(j); }
};

std::vector<std::pair<int, int>> ordered_pairs(int n);

}  // namespace polyhardy::detail
