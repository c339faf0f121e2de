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

#include <map>
#include <memory>
#include <vector>

#include "polyhardy/blaschke.hpp"
#include "polyhardy/kronop.hpp"

namespace polyhardy {

enum class SubmoduleKind { inner_sum, beurling_product };

const char* kind_name(SubmoduleKind k);

// Generators are keyed by 1-based variable index.
struct SubmoduleSpec {
  int n = 2;
  int N = 48;
  SubmoduleKind kind = SubmoduleKind::inner_sum;
  std::map<int, BlaschkeProduct> generators;

  void validate(bool allow_constant = false) const;
  std::vector<int> lambda() const;
  double max_zero_modulus() const;
  bool has_nonzero_zero() const;
  int guard_or_default(int guard) const;
};

KronOp projection_S(const SubmoduleSpec& spec);
KronOp projection_Q(const SubmoduleSpec& spec);
std::vector<KronOp> ordered_decomposition(const SubmoduleSpec& spec,
                                          const std::vector<int>& ordering);
KronOp restriction(const SubmoduleSpec& spec, int i);
KronOp evaluation_defect(const SubmoduleSpec& spec, int j);
KronOp compression(const SubmoduleSpec& spec, int i);
KronOp defect_restriction(const SubmoduleSpec& spec, int i);

// Builders with the per-axis pieces shared, so composed terms can merge.
class Submodule {
 public:
  explicit Submodule(SubmoduleSpec spec, bool allow_constant = false);

  const SubmoduleSpec& spec() const { return spec_; }
  int n() const { return spec_.n; }
  int N() const { return spec_.N; }

  const KronOp& P() const { return p_; }
  const KronOp& Q() const { return q_; }
  const KronOp& I() const { return id_; }
  const KronOp& shift(int i) const { return shifts_.at(axis(i)); }
  const KronOp& shift_adj(int i) const { return shifts_adj_.at(axis(i)); }
  const KronOp& ev0(int j) const { return ev0_.at(axis(j)); }

  KronOp restriction(int i) const;
  KronOp restriction_adj(int i) const;
  KronOp evaluation_defect(int j) const;
  KronOp compression(int i) const;
  KronOp compression_adj(int i) const;
  KronOp defect_restriction(int i) const;
  // M_i P_S M_i^*, the projection onto z_i S.
  KronOp shifted_projection(int i) const;
  std::vector<KronOp> ordered_decomposition(const std::vector<int>& ordering) const;

 private:
  std::size_t axis(int i) const;

  SubmoduleSpec spec_;
  KronOp id_, p_, q_;
  std::vector<KronOp> shifts_, shifts_adj_, ev0_;
  std::map<int, VarMatrix> model_, range_;
};

}  // namespace polyhardy
