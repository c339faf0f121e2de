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

#include "polyhardy/submodule.hpp"

#include <string>

namespace polyhardy {

const char* kind_name(SubmoduleKind k) {
  return k == SubmoduleKind::inner_sum ? "inner_sum" : "beurling_product";
}

void SubmoduleSpec::validate(bool allow_constant) const {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "n must be at least 2");
  if (N < 1) throw Error(ErrorCode::invalid_argument, "N must be positive");
  if (generators.empty()) throw Error(ErrorCode::invalid_argument, "no generators");
  for (const auto& [j, b] : generators) {
    if (j < 1 || j > n) {
      throw Error(ErrorCode::index_out_of_range,
                  "generator index " + std::to_string(j) + " outside 1.." + std::to_string(n));
    }
    if (kind == SubmoduleKind::inner_sum && b.degree() == 0 && !allow_constant) {
      throw Error(ErrorCode::invalid_argument,
                  "generator " + std::to_string(j) + " is constant");
    }
  }
}

std::vector<int> SubmoduleSpec::lambda() const {
  std::vector<int> out;
  for (const auto& kv : generators) out.push_back(kv.first);
  return out;
}

double SubmoduleSpec::max_zero_modulus() const {
  double r = 0.0;
  for (const auto& kv : generators) r = std::max(r, kv.second.max_modulus());
  return r;
}

bool SubmoduleSpec::has_nonzero_zero() const {
  for (const auto& kv : generators)
    for (const cplx& a : kv.second.zeros())
      if (a != cplx(0.0)) return true;
  return false;
}

int SubmoduleSpec::guard_or_default(int guard) const {
  return guard >= 0 ? guard : default_guard(max_zero_modulus(), N);
}

Submodule::Submodule(SubmoduleSpec spec, bool allow_constant)
    : spec_(std::move(spec)),
      id_(KronOp::identity(spec_.n, spec_.N)),
      p_(spec_.n, spec_.N),
      q_(spec_.n, spec_.N) {
  spec_.validate(allow_constant);
  const int n = spec_.n, N = spec_.N;
  const VarMatrix s = shift_matrix(N);
  Mat e0 = Mat::Zero(N + 1, N + 1);
  e0(0, 0) = 1.0;
  for (int i = 1; i <= n; ++i) {
    shifts_.push_back(lift(s, i, n));
    shifts_adj_.push_back(adjoint(shifts_.back()));
    ev0_.push_back(lift(VarMatrix(e0), i, n));
  }
  std::vector<KronOp::Factor> f(n);
  for (const auto& [j, b] : spec_.generators) {
    if (spec_.kind == SubmoduleKind::inner_sum) {
      model_.emplace(j, model_projection(b, N));
      f[j - 1] = std::make_shared<const Mat>(model_.at(j).mat());
    } else {
      range_.emplace(j, range_projection(b, N));
      f[j - 1] = std::make_shared<const Mat>(range_.at(j).mat());
    }
  }
  KronOp single(n, N, {{1.0, f}});
  if (spec_.kind == SubmoduleKind::inner_sum) {
    q_ = single;
    p_ = id_ - q_;
  } else {
    p_ = single;
    q_ = id_ - p_;
  }
}

std::size_t Submodule::axis(int i) const {
  if (i < 1 || i > spec_.n) throw Error(ErrorCode::index_out_of_range, "variable index");
  return static_cast<std::size_t>(i - 1);
}

KronOp Submodule::restriction(int i) const { return p_ * shift(i) * p_; }
KronOp Submodule::restriction_adj(int i) const { return p_ * shift_adj(i) * p_; }
KronOp Submodule::evaluation_defect(int j) const { return p_ * ev0(j) * p_; }
KronOp Submodule::compression(int i) const { return q_ * shift(i) * q_; }
KronOp Submodule::compression_adj(int i) const { return q_ * shift_adj(i) * q_; }

KronOp Submodule::defect_restriction(int i) const {
  return p_ - p_ * shift(i) * p_ * shift_adj(i) * p_;
}

KronOp Submodule::shifted_projection(int i) const { return shift(i) * p_ * shift_adj(i); }

std::vector<KronOp> Submodule::ordered_decomposition(const std::vector<int>& ordering) const {
  if (spec_.kind != SubmoduleKind::inner_sum) {
    throw Error(ErrorCode::precondition, "ordered decomposition needs an inner_sum spec");
  }
  if (ordering.size() != spec_.generators.size()) {
    throw Error(ErrorCode::invalid_argument, "ordering must list every generator once");
  }
  for (std::size_t d = 0; d < ordering.size(); ++d) {
    if (!spec_.generators.count(ordering[d])) {
      throw Error(ErrorCode::invalid_argument, "ordering names a variable without generator");
    }
    for (std::size_t e = 0; e < d; ++e)
      if (ordering[e] == ordering[d])
        throw Error(ErrorCode::invalid_argument, "ordering repeats a variable");
  }
  std::vector<KronOp> parts;
  for (std::size_t d = 0; d < ordering.size(); ++d) {
    const int lam = ordering[d];
    std::vector<KronOp::Factor> f(spec_.n);
    f[lam - 1] = std::make_shared<const Mat>(
        range_projection(spec_.generators.at(lam), spec_.N).mat());
    for (std::size_t e = d + 1; e < ordering.size(); ++e) {
      const int mu = ordering[e];
      f[mu - 1] = std::make_shared<const Mat>(model_.at(mu).mat());
    }
    parts.emplace_back(spec_.n, spec_.N, std::vector<KronOp::Term>{{1.0, std::move(f)}});
  }
  return parts;
}

KronOp projection_S(const SubmoduleSpec& spec) { return Submodule(spec).P(); }
KronOp projection_Q(const SubmoduleSpec& spec) { return Submodule(spec).Q(); }

std::vector<KronOp> ordered_decomposition(const SubmoduleSpec& spec,
                                          const std::vector<int>& ordering) {
  return Submodule(spec).ordered_decomposition(ordering);
}

KronOp restriction(const SubmoduleSpec& spec, int i) { return Submodule(spec).restriction(i); }
KronOp evaluation_defect(const SubmoduleSpec& spec, int j) {
  return Submodule(spec).evaluation_defect(j);
}
KronOp compression(const SubmoduleSpec& spec, int i) { return Submodule(spec).compression(i); }
KronOp defect_restriction(const SubmoduleSpec& spec, int i) {
  return Submodule(spec).defect_restriction(i);
}

}  // namespace polyhardy
