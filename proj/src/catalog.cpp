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
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "engine.hpp"
#include "ops.hpp"

namespace polyhardy {

namespace detail {

Ops::Ops(const Submodule& s) : sm(s), P(s.P()), Q(s.Q()) {
  for (int i = 1; i <= s.n(); ++i) {
    S.emplace_back(s.shift(i));
    Sa.emplace_back(s.shift_adj(i));
    E0.emplace_back(s.ev0(i));
  }
}

std::vector<std::pair<int, int>> ordered_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.emplace_back(i, j);
  return out;
}

}  // namespace detail

namespace {

using detail::Bound;
using detail::Engine;
using detail::Ops;
using detail::pair_name;

std::string var_name(const char* base, int j) {
  return std::string(base) + "(j=" + std::to_string(j) + ")";
}

void commutator_rest(Engine& e, const Ops& op) {
  for (auto [i, j] : detail::ordered_pairs(e.n())) {
    OpExpr rhs = op.P * op.S[i - 1] * op.Q * op.Sa[j - 1] * op.P;
    e.norm(pair_name("commutator_rest", i, j), op.K(i, j) - rhs, Bound::lt, e.opts().tol);
  }
}

void abc(Engine& e, const Ops& op) {
  for (int j = 1; j <= e.n(); ++j) {
    OpExpr rhs = op.P * op.S[j - 1] * op.Q * op.Sa[j - 1] * op.P;
    e.norm(var_name("abc", j), op.A(j) - rhs, Bound::lt, e.opts().tol);
  }
}

void first_factor(Engine& e, const Ops& op) {
  for (int j = 1; j <= e.n(); ++j) {
    OpExpr d = op.defect(j), ev = op.ev_defect(j);
    e.norm(var_name("product", j), d * ev - op.A(j), Bound::lt, e.opts().tol);
    e.norm(var_name("commutator", j), commutator(d, ev), Bound::lt, e.opts().tol);
  }
}

void douglas_psd(Engine& e, const Ops& op, bool a_side) {
  for (auto [i, j] : detail::ordered_pairs(e.n())) {
    OpExpr k = op.K(i, j);
    OpExpr form = a_side ? op.A(i) - k * k.adjoint() : op.A(j) - k.adjoint() * k;
    e.min_eig(pair_name("min_eig", i, j), form, -e.opts().tol);
  }
}

void comp_commutator(Engine& e, const Ops& op) {
  for (auto [i, j] : detail::ordered_pairs(e.n())) {
    OpExpr rhs = op.Q * op.Sa[i - 1] * op.P * op.S[j - 1] * op.Q;
    e.norm(pair_name("comp_commutator", i, j), op.L(i, j) - rhs, Bound::lt, e.opts().tol);
  }
}

void comp_psd(Engine& e, const Ops& op, bool a_side) {
  for (auto [i, j] : detail::ordered_pairs(e.n())) {
    OpExpr l = op.L(i, j);
    OpExpr form = a_side ? op.D2(j) - l.adjoint() * l : op.D2(i) - l * l.adjoint();
    e.min_eig(pair_name("min_eig", i, j), form, -e.opts().tol);
  }
}

void square_implication(Engine& e, const Ops& op) {
  const double tol = e.opts().tol;
  for (auto [i, j] : detail::ordered_pairs(e.n())) {
    OpExpr k = op.K(i, j);
    const std::string pa = pair_name("premise", i, j), pb = pair_name("square", i, j);
    const double a = e.norm(pa, k * op.A(i), Bound::none, 0.0);
    if (a < tol) {
      e.norm(pb, k * k, Bound::lt, 10.0 * tol);
    } else {
      e.norm(pb, k * k, Bound::none, 0.0);
      e.note(pa + " does not vanish; implication holds vacuously");
    }
  }
}

void cube_compression(Engine& e, const Ops& op) {
  const bool asserted = op.sm.spec().kind == SubmoduleKind::inner_sum;
  for (auto [i, j] : detail::ordered_pairs(e.n())) {
    OpExpr m = op.L(j, i);  // [C_i, C_j^*]
    e.norm(pair_name("cube", i, j), m * m * m, asserted ? Bound::lt : Bound::none, e.opts().tol);
  }
  if (!asserted) e.note("not asserted for beurling_product specs");
}

void co_doubly(Engine& e, const Ops& op) {
  const bool asserted = op.sm.spec().kind == SubmoduleKind::inner_sum;
  for (auto [i, j] : detail::ordered_pairs(e.n()))
    e.norm(pair_name("co_doubly", i, j), op.L(i, j), asserted ? Bound::lt : Bound::none,
           e.opts().tol);
  if (!asserted) e.note("not asserted for beurling_product specs");
}

void szego_adjoint(Engine& e, const Ops& op) {
  const int n = e.n(), N = e.N();
  std::mt19937_64 rng(e.opts().seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<cplx>> pts(8, std::vector<cplx>(n));
  for (auto& w : pts)
    for (auto& c : w) c = std::polar(0.5 * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));

  for (const auto& [lam, phi] : op.sm.spec().generators) {
    KronOp ta = lift(toeplitz_mult(taylor_coeffs(phi, N)).adjoint(), lam, n);
    double worst = 0.0;
    for (const auto& w : pts) {
      std::vector<Vec> f;
      for (int a = 0; a < n; ++a) f.push_back(szego_vector(w[a], N));
      CoeffTensor s = CoeffTensor::product(f);
      CoeffTensor diff = ta.apply(s) - std::conj(phi.eval(w[lam - 1])) * s;
      e.window().apply(diff);
      worst = std::max(worst, diff.norm());
    }
    e.value(var_name("szego_adjoint", lam), worst, Bound::lt, e.opts().tol);
  }
}

void ordering_invariance(Engine& e, const Ops& op) {
  if (op.sm.spec().kind != SubmoduleKind::inner_sum) {
    e.note("ordered decomposition exists only for inner_sum specs");
    return;
  }
  std::vector<int> asc = op.sm.spec().lambda(), desc(asc.rbegin(), asc.rend());
  auto pa = op.sm.ordered_decomposition(asc), pd = op.sm.ordered_decomposition(desc);
  KronOp sa = KronOp::zero(e.n(), e.N()), sd = sa;
  for (const auto& p : pa) sa = sa + p;
  for (const auto& p : pd) sd = sd + p;
  const double tol = e.opts().tol;
  e.norm("sum_ascending_vs_descending", OpExpr(sa) - OpExpr(sd), Bound::lt, tol);
  e.norm("sum_vs_projection", OpExpr(sa) - op.P, Bound::lt, tol);
  for (std::size_t a = 0; a < pa.size(); ++a)
    for (std::size_t b = 0; b < pa.size(); ++b)
      if (a != b)
        e.norm("orthogonality(" + std::to_string(asc[a]) + "," + std::to_string(asc[b]) + ")",
               OpExpr(pa[a]) * OpExpr(pa[b]), Bound::lt, tol);
}

// One-variable computations run at a larger internal truncation so that
// products of un-adjointed Toeplitz factors keep their tails.
struct OneVar {
  int N1, w;
  Mat t(const BlaschkeProduct& b) const { return toeplitz_mult(taylor_coeffs(b, N1)).mat(); }
  double norm(const Mat& m) const { return spectral_norm(m.topLeftCorner(w + 1, w + 1)); }
};

void partial_isometry_eqns(Engine& e, const Ops& op) {
  const OneVar ov{4 * e.N(), e.window().max_degree};
  const Mat id = Mat::Identity(ov.N1 + 1, ov.N1 + 1);
  for (const auto& [a, phi] : op.sm.spec().generators)
    for (const auto& [b, psi] : op.sm.spec().generators) {
      const Mat tf = ov.t(phi), tp = ov.t(psi);
      const Mat p = tf.adjoint() * tp;
      const Mat gap = p - p * p.adjoint() * p;
      const Mat l1 = tf.adjoint() * (id - tp * tp.adjoint()) * tf * tf.adjoint() * tp;
      const Mat l2 = tf.adjoint() * (id - tp * tp.adjoint()) * (id - tf * tf.adjoint()) * tp;
      const std::string tag = "(phi=" + std::to_string(a) + ",psi=" + std::to_string(b) + ")";
      e.value("condn1" + tag, ov.norm(l1 - gap), Bound::lt, e.opts().tol);
      e.value("condn2" + tag, ov.norm(l2 + gap), Bound::lt, e.opts().tol);
    }
  e.note("one-variable equations evaluated at internal truncation " + std::to_string(ov.N1));
}

void nonzero_product(Engine& e, const Ops& op) {
  const OneVar ov{4 * e.N(), e.window().max_degree};
  const Mat id = Mat::Identity(ov.N1 + 1, ov.N1 + 1);
  const auto& gens = op.sm.spec().generators;
  for (auto ia = gens.begin(); ia != gens.end(); ++ia)
    for (auto ib = ia; ib != gens.end(); ++ib) {
      if (ia->second.degree() == 0 || ib->second.degree() == 0) continue;
      const Mat tf = ov.t(ia->second), tp = ov.t(ib->second);
      const Mat prod = (id - tf * tf.adjoint()) * (id - tp * tp.adjoint());
      e.value("nonzero(phi=" + std::to_string(ia->first) + ",psi=" + std::to_string(ib->first) +
                  ")",
              ov.norm(prod), Bound::gt, e.opts().tol);
    }
}

using CatalogFn = std::function<void(Engine&, const Ops&)>;

const std::vector<std::pair<std::string, CatalogFn>>& catalog() {
  static const std::vector<std::pair<std::string, CatalogFn>> c = {
      {"commutator_rest", commutator_rest},
      {"abc", abc},
      {"first_factor", first_factor},
      {"douglas_psd_a", [](Engine& e, const Ops& o) { douglas_psd(e, o, true); }},
      {"douglas_psd_b", [](Engine& e, const Ops& o) { douglas_psd(e, o, false); }},
      {"comp_commutator", comp_commutator},
      {"comp_psd_a", [](Engine& e, const Ops& o) { comp_psd(e, o, true); }},
      {"comp_psd_b", [](Engine& e, const Ops& o) { comp_psd(e, o, false); }},
      {"square_implication", square_implication},
      {"cube_compression", cube_compression},
      {"co_doubly", co_doubly},
      {"szego_adjoint", szego_adjoint},
      {"ordering_invariance", ordering_invariance},
      {"partial_isometry_eqns", partial_isometry_eqns},
      {"nonzero_product", nonzero_product},
  };
  return c;
}

}  // namespace

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& kv : catalog()) ids.push_back(kv.first);
  return ids;
}

Report check_identity(const std::string& id, const SubmoduleSpec& spec0, const CheckOptions& o) {
  const auto& c = catalog();
  auto it = std::find_if(c.begin(), c.end(), [&](const auto& kv) { return kv.first == id; });
  if (it == c.end()) throw Error(ErrorCode::unknown_check, "unknown check id \"" + id + "\"");
  const SubmoduleSpec spec = detail::with_N(spec0, detail::effective_N(spec0, o));
  const Submodule sm(spec);
  const Ops op(sm);
  Engine e(id, {&spec}, o, spec.n, spec.N, spec.guard_or_default(o.guard));
  it->second(e, op);
  return e.finish();
}

}  // namespace polyhardy
