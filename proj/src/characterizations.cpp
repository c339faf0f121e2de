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
#include <cmath>
#include <set>
#include <sstream>

#include "engine.hpp"
#include "ops.hpp"

namespace polyhardy {

namespace {

using detail::Bound;
using detail::Engine;
using detail::Ops;

struct Prepared {
  SubmoduleSpec spec;
  Submodule sm;
  Ops op;
  explicit Prepared(SubmoduleSpec s) : spec(std::move(s)), sm(spec), op(sm) {}
};

// (I_S - E_j E_j^*)(I_S - R_j R_j^*)
OpExpr cond1(const Ops& op, int j) { return op.ev_defect(j) * op.defect(j); }

std::string set_name(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "}";
}

void require_inner_sum(const SubmoduleSpec& s, const char* what) {
  if (s.kind != SubmoduleKind::inner_sum)
    throw Error(ErrorCode::precondition, std::string(what) + " needs an inner_sum spec");
}

int guard_for(const std::vector<const SubmoduleSpec*>& specs, int N, const CheckOptions& o) {
  if (o.guard >= 0) return o.guard;
  double r = 0.0;
  for (const auto* s : specs) r = std::max(r, s->max_zero_modulus());
  return default_guard(r, N);
}

}  // namespace

Report check_one_variable_beurling(const SubmoduleSpec& spec0, int i, const CheckOptions& o) {
  Prepared p(detail::with_N(spec0, detail::effective_N(spec0, o)));
  if (i < 1 || i > p.spec.n) throw Error(ErrorCode::index_out_of_range, "variable index");
  Engine e("one_variable_beurling[i=" + std::to_string(i) + "]", {&p.spec}, o, p.spec.n,
           p.spec.N, p.spec.guard_or_default(o.guard));
  for (int j = 1; j <= p.spec.n; ++j)
    if (j != i) e.norm("cond(j=" + std::to_string(j) + ")", cond1(p.op, j), Bound::lt, o.tol);
  return e.finish();
}

Report check_sum_characterization(const SubmoduleSpec& spec0, const std::vector<int>& lambda0,
                                  const CheckOptions& o) {
  Prepared p(detail::with_N(spec0, detail::effective_N(spec0, o)));
  std::set<int> lam(lambda0.begin(), lambda0.end());
  for (int l : lam)
    if (l < 1 || l > p.spec.n) throw Error(ErrorCode::index_out_of_range, "index in Lambda");
  std::vector<int> lv(lam.begin(), lam.end());
  Engine e("sum_characterization[L=" + set_name(lv) + "]", {&p.spec}, o, p.spec.n, p.spec.N,
           p.spec.guard_or_default(o.guard));
  for (int l = 1; l <= p.spec.n; ++l)
    if (!lam.count(l)) e.norm("cond1(l=" + std::to_string(l) + ")", cond1(p.op, l), Bound::lt, o.tol);
  for (std::size_t a = 0; a < lv.size(); ++a)
    for (std::size_t b = a + 1; b < lv.size(); ++b) {
      const int i = lv[a], j = lv[b];
      e.norm(detail::pair_name("cond2", i, j), cond1(p.op, i) * cond1(p.op, j), Bound::lt, o.tol);
    }
  return e.finish();
}

Report check_defect_commuting(const SubmoduleSpec& spec0, int i, int j, const CheckOptions& o) {
  require_inner_sum(spec0, "defect commuting check");
  if (i == j || !spec0.generators.count(i) || !spec0.generators.count(j))
    throw Error(ErrorCode::precondition, "i and j must be distinct generator indices");
  Prepared p(detail::with_N(spec0, detail::effective_N(spec0, o)));
  Engine e("defect_commuting[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]",
           {&p.spec}, o, p.spec.n, p.spec.N, p.spec.guard_or_default(o.guard));
  const bool commute =
      p.spec.generators.at(i).vanishes_at_origin() && p.spec.generators.at(j).vanishes_at_origin();
  e.predict(commute ? "commute" : "non-commute");
  const double r = e.norm("commutator", commutator(p.op.defect(i), p.op.defect(j)),
                          commute ? Bound::lt : Bound::ge, commute ? o.tol : o.floor);
  if (commute ? r >= o.tol : r < o.floor) e.note("numeric result disagrees with prediction");
  return e.finish();
}

namespace {

struct PairPrediction {
  bool divisible = true;
  std::vector<int> a, b;  // phi_j | psi_j, resp. psi_j | phi_j (not phi_j | psi_j)
};

PairPrediction predict_pair(const SubmoduleSpec& phi, const SubmoduleSpec& psi, double tol) {
  PairPrediction pr;
  for (const auto& [j, f] : phi.generators) {
    auto it = psi.generators.find(j);
    if (it == psi.generators.end()) continue;
    if (divides(f, it->second, tol).divides) {
      pr.a.push_back(j);
    } else if (divides(it->second, f, tol).divides) {
      pr.b.push_back(j);
    } else {
      pr.divisible = false;
    }
  }
  return pr;
}

void require_pair(const SubmoduleSpec& phi, const SubmoduleSpec& psi) {
  require_inner_sum(phi, "pair check");
  require_inner_sum(psi, "pair check");
  if (phi.n != psi.n) throw Error(ErrorCode::precondition, "specs differ in variable count");
}

}  // namespace

Report check_projection_commuting(const SubmoduleSpec& phi0, const SubmoduleSpec& psi0,
                                  const CheckOptions& o) {
  require_pair(phi0, psi0);
  const int N = detail::effective_N(phi0, o);
  if (o.N <= 0 && psi0.N != phi0.N) throw Error(ErrorCode::precondition, "specs differ in N");
  Prepared a(detail::with_N(phi0, N)), b(detail::with_N(psi0, N));
  Engine e("projection_commuting", {&a.spec, &b.spec}, o, a.spec.n, N,
           guard_for({&a.spec, &b.spec}, N, o));
  const PairPrediction pr = predict_pair(a.spec, b.spec, o.divisibility_tol);
  e.predict(pr.divisible ? "commute (divisibility chain holds)" : "non-commute (not divisible)");
  const double r = e.norm("commutator", commutator(a.op.P, b.op.P),
                          pr.divisible ? Bound::lt : Bound::ge, pr.divisible ? o.tol : o.floor);
  if (pr.divisible ? r >= o.tol : r < o.floor) e.note("numeric result disagrees with prediction");
  return e.finish();
}

Report check_finite_rank_product(const SubmoduleSpec& phi0, const SubmoduleSpec& psi0,
                                 const CheckOptions& o) {
  require_pair(phi0, psi0);
  std::set<int> cover;
  for (const auto& kv : phi0.generators) cover.insert(kv.first);
  for (const auto& kv : psi0.generators) cover.insert(kv.first);
  if (static_cast<int>(cover.size()) != phi0.n)
    throw Error(ErrorCode::precondition, "the two generator sets must cover every variable");
  const int N = detail::effective_N(phi0, o);
  if (o.N <= 0 && psi0.N != phi0.N) throw Error(ErrorCode::precondition, "specs differ in N");
  Prepared a(detail::with_N(phi0, N)), b(detail::with_N(psi0, N));
  Engine e("finite_rank_product", {&a.spec, &b.spec}, o, a.spec.n, N,
           guard_for({&a.spec, &b.spec}, N, o));
  const PairPrediction pr = predict_pair(a.spec, b.spec, o.divisibility_tol);
  if (!pr.divisible) {
    e.predict("not a projection (not divisible)");
    e.norm("commutator", commutator(a.op.P, b.op.P), Bound::ge, o.floor);
    return e.finish();
  }
  long predicted = 1;
  for (int j : pr.a) predicted *= a.spec.generators.at(j).degree();
  for (int j : pr.b) predicted *= b.spec.generators.at(j).degree();
  for (const auto& [j, f] : a.spec.generators)
    if (!b.spec.generators.count(j)) predicted *= f.degree();
  for (const auto& [j, f] : b.spec.generators)
    if (!a.spec.generators.count(j)) predicted *= f.degree();
  e.predict("rank " + std::to_string(predicted));
  e.norm("commutator", commutator(a.op.P, b.op.P), Bound::lt, o.tol);

  const KronOp prod = compose(a.sm.Q(), b.sm.Q());
  const cplx tr = trace(prod);
  e.value("trace", tr.real(), Bound::none, 0.0);
  e.value("trace_imag", std::abs(tr.imag()), Bound::lt, 1e-6);
  e.value("predicted_rank", static_cast<double>(predicted), Bound::none, 0.0);
  e.value("trace_error", std::abs(tr.real() - static_cast<double>(predicted)), Bound::lt, 1e-6);

  std::size_t dim = 1;
  for (int k = 0; k < a.spec.n; ++k) dim *= static_cast<std::size_t>(N + 1);
  if (dim <= dense_cap()) {
    // Rank of the Gram operator prod^* prod, expanded through the Kronecker terms.
    const int rank = numerical_rank(materialize(prod), 1e-6);
    e.value("dense_rank", rank, Bound::none, 0.0);
    e.value("dense_rank_error", std::abs(rank - static_cast<double>(predicted)), Bound::lt, 0.5);
  } else {
    e.note("dense rank skipped: dimension " + std::to_string(dim) + " above cap");
  }
  return e.finish();
}

Report check_partial_isometry(const SubmoduleSpec& spec0, int lambda, const CheckOptions& o) {
  require_inner_sum(spec0, "partial isometry check");
  if (!spec0.generators.count(lambda))
    throw Error(ErrorCode::precondition, "lambda must be a generator index");
  Prepared p(detail::with_N(spec0, detail::effective_N(spec0, o)));
  Engine e("partial_isometry[l=" + std::to_string(lambda) + "]", {&p.spec}, o, p.spec.n,
           p.spec.N, p.spec.guard_or_default(o.guard));
  const BlaschkeProduct& phi = p.spec.generators.at(lambda);
  const bool vanishes = phi.vanishes_at_origin();
  const OpExpr x = p.op.ev_defect(lambda);
  const OpExpr idem = x * x - x;
  if (!vanishes) {
    e.predict("not a partial isometry (generator nonzero at 0)");
    e.norm("idempotence", idem, Bound::ge, o.floor);
    return e.finish();
  }
  const Divisibility q = divides(BlaschkeProduct({0.0}), phi, o.divisibility_tol);
  SubmoduleSpec reduced = p.spec;
  reduced.generators.at(lambda) = *q.quotient;
  const Submodule sl(reduced, true);
  e.predict("partial isometry (generator vanishes at 0)");
  e.norm("idempotence", idem, Bound::lt, o.tol);
  e.norm("shifted_projection", x - OpExpr(sl.shifted_projection(lambda)), Bound::lt, o.tol);
  return e.finish();
}

Report check_wandering_nonorthogonality(const SubmoduleSpec& spec0, const CheckOptions& o) {
  Prepared p(detail::with_N(spec0, detail::effective_N(spec0, o)));
  Engine e("wandering_nonorthogonality", {&p.spec}, o, p.spec.n, p.spec.N,
           p.spec.guard_or_default(o.guard));
  double worst = 0.0;
  for (auto [i, j] : detail::ordered_pairs(p.spec.n)) {
    if (i > j) continue;
    worst = std::max(worst, e.norm(detail::pair_name("product", i, j),
                                   p.op.defect(i) * p.op.defect(j), Bound::none, 0.0));
  }
  e.value("max", worst, Bound::gt, o.floor);
  return e.finish();
}

Report reproduce_section4(double alpha, const CheckOptions& o) {
  if (!(alpha > 0.0 && alpha <= 0.8)) throw Error(ErrorCode::invalid_argument, "alpha must be in (0, 0.8]");
  const int N = o.N > 0 ? o.N : 48;
  if (N < 40) throw Error(ErrorCode::invalid_argument, "N must be at least 40");
  SubmoduleSpec spec;
  spec.n = 2;
  spec.N = N;
  spec.kind = SubmoduleKind::inner_sum;
  const BlaschkeProduct b = BlaschkeProduct::factor(alpha);
  spec.generators = {{1, b}, {2, b}};
  Prepared p(spec);
  const int guard = p.spec.guard_or_default(o.guard);
  Engine e("section4", {&p.spec}, o, 2, N, guard);

  const Vec one = Vec::Unit(N + 1, 0);
  const Vec tb = taylor_coeffs(b, N);
  const Vec tb2 = toeplitz_mult(tb).mat() * tb;
  const Vec zs = shift_matrix(N).mat() * szego_vector(alpha, N);  // z s_alpha(z)
  const Vec zsb = toeplitz_mult(tb).mat() * zs;                    // z s_alpha(z) b(z)
  const double k = 1.0 - alpha * alpha;

  // f = [b(z1) + b(z2)] b(z2)
  const CoeffTensor f = CoeffTensor::product({tb, tb}) + CoeffTensor::product({one, tb2});
  const KronOp r1 = p.sm.restriction(1) * p.sm.restriction_adj(1);
  const KronOp r2 = p.sm.restriction(2) * p.sm.restriction_adj(2);
  const CoeffTensor r1f = r1.apply(f), r2f = r2.apply(f);
  const CoeffTensor r2r1f = r2.apply(r1f), r1r2f = r1.apply(r2f);

  const CoeffTensor c1 = k * CoeffTensor::product({zs, tb});
  const CoeffTensor c2 = (k * k) * CoeffTensor::product({tb, zs});
  const CoeffTensor c3 =
      k * ((1.0 + alpha * alpha) * CoeffTensor::product({tb, zs}) + CoeffTensor::product({one, zsb}));
  const CoeffTensor c4 = (k * k * (1.0 + alpha * alpha)) * CoeffTensor::product({zs, tb});
  const CoeffTensor c5 = c4 - c2;

  auto err = [&](CoeffTensor d) {
    e.window().apply(d);
    return d.vec().cwiseAbs().maxCoeff();
  };
  e.value("R1R1*f", err(r1f - c1), Bound::lt, o.tol);
  e.value("R2R2*R1R1*f", err(r2r1f - c2), Bound::lt, o.tol);
  e.value("R2R2*f", err(r2f - c3), Bound::lt, o.tol);
  e.value("R1R1*R2R2*f", err(r1r2f - c4), Bound::lt, o.tol);
  CoeffTensor comm = r1r2f - r2r1f;
  e.value("commutator_difference", err(comm - c5), Bound::lt, o.tol);
  e.window().apply(comm);
  e.value("commutator_norm", comm.norm(), Bound::gt, o.floor);

  // adjoint shift of b_alpha against (1 - alpha^2) s_alpha, one variable
  Vec d = shift_matrix(N).mat().adjoint() * tb - k * szego_vector(alpha, N);
  e.value("adjoint_shift_b", d.head(N - guard + 1).cwiseAbs().maxCoeff(), Bound::lt, o.tol);
  return e.finish();
}

}  // namespace polyhardy
