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
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>

#include <Eigen/SVD>
#include <Eigen/SparseCore>

#include "polyhardy/kronop.hpp"

namespace polyhardy {

namespace {

using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Factor = KronOp::Factor;

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_same_shape(int n1, int N1, int n2, int N2) {
  if (n1 != n2 || N1 != N2) throw Error(ErrorCode::dimension_mismatch, "operator shape mismatch");
}

// Per-factor apply strategy. Shift and evaluation factors are sparse, and
// projections are identity plus a low-rank part.
struct Plan {
  enum Kind { dense, sparse, low_rank } kind = dense;
  std::vector<Eigen::Triplet<cplx>> nz;
  cplx alpha = 0.0;
  Mat u, v;  // M = alpha I + u v^*
};

std::shared_ptr<const Plan> make_plan(const Mat& m) {
  auto p = std::make_shared<Plan>();
  const Eigen::Index d = m.rows();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i)
      if (m(i, j) != 0.0) p->nz.emplace_back(i, j, m(i, j));
  if (static_cast<Eigen::Index>(p->nz.size()) <= 3 * d) {
    p->kind = Plan::sparse;
    return p;
  }
  p->nz.clear();
  for (const cplx alpha : {cplx(0.0), cplx(1.0)}) {
    const Mat dm = m - alpha * Mat::Identity(d, d);
    Eigen::BDCSVD<Mat> svd(dm, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    Eigen::Index r = 0;
    while (r < s.size() && s(r) > 1e-15 * scale) ++r;
    if (4 * r <= d) {
      p->kind = Plan::low_rank;
      p->alpha = alpha;
      p->u = svd.matrixU().leftCols(r) * s.head(r).asDiagonal();
      p->v = svd.matrixV().leftCols(r);
      return p;
    }
  }
  return p;
}

struct PlanEntry {
  std::weak_ptr<const Mat> owner;
  std::shared_ptr<const Plan> plan;
};

std::shared_ptr<const Plan> plan_for(const Factor& f) {
  static std::mutex mu;
  static std::unordered_map<const Mat*, PlanEntry> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(f.get());
  if (it != cache.end() && it->second.owner.lock() == f) return it->second.plan;
  if (cache.size() > 4096) {
    for (auto e = cache.begin(); e != cache.end();)
      e = e->second.owner.expired() ? cache.erase(e) : std::next(e);
  }
  auto plan = make_plan(*f);
  cache[f.get()] = {f, plan};
  return plan;
}

// dst = M applied along `axis` of src.
void apply_axis(const Factor& f, const cplx* src, cplx* dst, int axis, int n, int N,
                Eigen::Index batch = 1) {
  const Mat& m = *f;
  const Eigen::Index d = N + 1;
  const Eigen::Index outer = batch * static_cast<Eigen::Index>(ipow(d, axis));
  const Eigen::Index inner = static_cast<Eigen::Index>(ipow(d, n - 1 - axis));
  const auto plan = plan_for(f);
  if (plan->kind == Plan::sparse) {
    for (Eigen::Index o = 0; o < outer; ++o) {
      Eigen::Map<const RowMat> x(src + o * d * inner, d, inner);
      Eigen::Map<RowMat> y(dst + o * d * inner, d, inner);
      y.setZero();
      for (const auto& t : plan->nz) y.row(t.row()) += t.value() * x.row(t.col());
    }
    return;
  }
  if (inner == 1) {
    Eigen::Map<const RowMat> x(src, outer, d);
    Eigen::Map<RowMat> y(dst, outer, d);
    if (plan->kind == Plan::low_rank) {
      // y = x M^T with M^T = alpha I + conj(v) u^T
      const Mat xv = x * plan->v.conjugate();
      y.noalias() = xv * plan->u.transpose();
      if (plan->alpha != 0.0) y += plan->alpha * x;
    } else {
      y.noalias() = x * m.transpose();
    }
    return;
  }
  for (Eigen::Index o = 0; o < outer; ++o) {
    Eigen::Map<const RowMat> x(src + o * d * inner, d, inner);
    Eigen::Map<RowMat> y(dst + o * d * inner, d, inner);
    if (plan->kind == Plan::low_rank) {
      const Mat vx = plan->v.adjoint() * x;
      y.noalias() = plan->u * vx;
      if (plan->alpha != 0.0) y += plan->alpha * x;
    } else {
      y.noalias() = m * x;
    }
  }
}

struct FactorsHash {
  std::size_t operator()(const std::vector<Factor>& f) const {
    std::size_t h = 0;
    for (const auto& p : f) h = h * 1000003u ^ std::hash<const void*>()(p.get());
    return h;
  }
};

struct FactorsEq {
  bool operator()(const std::vector<Factor>& a, const std::vector<Factor>& b) const {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].get() != b[k].get()) return false;
    return true;
  }
};

// Collects terms, merging identical factor maps.
class TermBag {
 public:
  void add(cplx s, std::vector<Factor> f) {
    auto [it, fresh] = index_.try_emplace(f, terms_.size());
    if (fresh) {
      if (terms_.size() >= KronOp::kMaxTerms) {
        throw Error(ErrorCode::term_limit,
                    "KronOp exceeds " + std::to_string(KronOp::kMaxTerms) + " terms");
      }
      terms_.push_back({s, std::move(f)});
    } else {
      terms_[it->second].scale += s;
    }
  }
  std::vector<KronOp::Term> take() {
    std::vector<KronOp::Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_)
      if (t.scale != cplx(0.0)) out.push_back(std::move(t));
    return out;
  }

 private:
  std::vector<KronOp::Term> terms_;
  std::unordered_map<std::vector<Factor>, std::size_t, FactorsHash, FactorsEq> index_;
};

KronOp from_bag(int n, int N, TermBag& bag) { return KronOp(n, N, bag.take()); }

}  // namespace

KronOp::KronOp(int n, int N, std::vector<Term> terms)
    : n_(n), N_(N), terms_(std::move(terms)) {
  if (terms_.size() > kMaxTerms) throw Error(ErrorCode::term_limit, "KronOp term limit");
}

KronOp KronOp::identity(int n, int N) {
  KronOp a(n, N);
  a.terms_.push_back({1.0, std::vector<Factor>(n)});
  return a;
}

void KronOp::add_term(cplx s, std::vector<Factor> f) {
  if (static_cast<int>(f.size()) != n_) throw Error(ErrorCode::dimension_mismatch, "factor arity");
  for (const auto& m : f)
    if (m && m->rows() != N_ + 1) throw Error(ErrorCode::dimension_mismatch, "factor size");
  for (auto& t : terms_) {
    if (FactorsEq()(t.factors, f)) {
      t.scale += s;
      return;
    }
  }
  if (terms_.size() >= kMaxTerms) throw Error(ErrorCode::term_limit, "KronOp term limit");
  terms_.push_back({s, std::move(f)});
}

CoeffTensor KronOp::apply(const CoeffTensor& t) const {
  check_same_shape(n_, N_, t.n(), t.N());
  CoeffTensor out(n_, N_);
  CoeffTensor a(n_, N_), b(n_, N_);
  for (const Term& term : terms_) {
    const CoeffTensor* cur = &t;
    for (int ax = 0; ax < n_; ++ax) {
      if (!term.factors[ax]) continue;
      CoeffTensor* dst = (cur == &a) ? &b : &a;
      apply_axis(term.factors[ax], cur->data(), dst->data(), ax, n_, N_);
      cur = dst;
    }
    out.vec() += term.scale * cur->vec();
  }
  return out;
}

Mat KronOp::apply_block(const Mat& x) const {
  const Eigen::Index dim = static_cast<Eigen::Index>(ipow(N_ + 1, n_));
  if (x.rows() != dim) throw Error(ErrorCode::dimension_mismatch, "block row count mismatch");
  Mat out = Mat::Zero(dim, x.cols());
  Mat a(dim, x.cols()), b(dim, x.cols());
  for (const Term& term : terms_) {
    const Mat* cur = &x;
    for (int ax = 0; ax < n_; ++ax) {
      if (!term.factors[ax]) continue;
      Mat* dst = (cur == &a) ? &b : &a;
      apply_axis(term.factors[ax], cur->data(), dst->data(), ax, n_, N_, x.cols());
      cur = dst;
    }
    out += term.scale * *cur;
  }
  return out;
}

cplx KronOp::trace() const {
  cplx s = 0.0;
  for (const Term& term : terms_) {
    cplx p = term.scale;
    for (const auto& f : term.factors) p *= f ? f->trace() : cplx(N_ + 1);
    s += p;
  }
  return s;
}

KronOp lift(const VarMatrix& m, int j, int n) {
  if (j < 1 || j > n) throw Error(ErrorCode::index_out_of_range, "variable index out of range");
  const int N = m.degree_bound();
  KronOp a(n, N);
  std::vector<Factor> f(n);
  f[j - 1] = std::make_shared<const Mat>(m.mat());
  a.add_term(1.0, std::move(f));
  return a;
}

KronOp compose(const KronOp& a, const KronOp& b) {
  check_same_shape(a.n(), a.N(), b.n(), b.N());
  std::map<std::pair<const Mat*, const Mat*>, Factor> memo;
  auto mul = [&](const Factor& x, const Factor& y) -> Factor {
    if (!x) return y;
    if (!y) return x;
    auto [it, fresh] = memo.try_emplace({x.get(), y.get()});
    if (fresh) it->second = std::make_shared<const Mat>((*x) * (*y));
    return it->second;
  };
  TermBag bag;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      std::vector<Factor> f(a.n());
      for (int k = 0; k < a.n(); ++k) f[k] = mul(ta.factors[k], tb.factors[k]);
      bag.add(ta.scale * tb.scale, std::move(f));
    }
  return from_bag(a.n(), a.N(), bag);
}

KronOp add(const KronOp& a, const KronOp& b) {
  check_same_shape(a.n(), a.N(), b.n(), b.N());
  TermBag bag;
  for (const auto& t : a.terms()) bag.add(t.scale, t.factors);
  for (const auto& t : b.terms()) bag.add(t.scale, t.factors);
  return from_bag(a.n(), a.N(), bag);
}

KronOp scale(const KronOp& a, cplx s) {
  if (s == cplx(0.0)) return KronOp(a.n(), a.N());
  std::vector<KronOp::Term> terms = a.terms();
  for (auto& t : terms) t.scale *= s;
  return KronOp(a.n(), a.N(), std::move(terms));
}

KronOp adjoint(const KronOp& a) {
  std::map<const Mat*, Factor> memo;
  std::vector<KronOp::Term> terms;
  for (const auto& t : a.terms()) {
    std::vector<Factor> f(a.n());
    for (int k = 0; k < a.n(); ++k) {
      if (!t.factors[k]) continue;
      auto [it, fresh] = memo.try_emplace(t.factors[k].get());
      if (fresh) it->second = std::make_shared<const Mat>(t.factors[k]->adjoint());
      f[k] = it->second;
    }
    terms.push_back({std::conj(t.scale), std::move(f)});
  }
  return KronOp(a.n(), a.N(), std::move(terms));
}

KronOp commutator(const KronOp& a, const KronOp& b) {
  return add(compose(a, b), scale(compose(b, a), -1.0));
}

// ---- OpExpr ----

OpExpr::OpExpr(const KronOp& a) : n_(a.n()), N_(a.N()) {
  chains_.push_back({1.0, {std::make_shared<const KronOp>(a)}});
}

CoeffTensor OpExpr::apply(const CoeffTensor& t) const {
  check_same_shape(n_, N_, t.n(), t.N());
  CoeffTensor out(n_, N_);
  for (const Chain& c : chains_) {
    CoeffTensor x = t;
    for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) x = (*it)->apply(x);
    out.vec() += c.scale * x.vec();
  }
  return out;
}

Mat OpExpr::apply_block(const Mat& x) const {
  Mat out = Mat::Zero(x.rows(), x.cols());
  for (const Chain& c : chains_) {
    Mat y = x;
    for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) y = (*it)->apply_block(y);
    out += c.scale * y;
  }
  return out;
}

OpExpr OpExpr::adjoint() const {
  std::map<const KronOp*, std::shared_ptr<const KronOp>> memo;
  OpExpr out(n_, N_);
  for (const Chain& c : chains_) {
    Chain r{std::conj(c.scale), {}};
    for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) {
      auto [m, fresh] = memo.try_emplace(it->get());
      if (fresh) m->second = std::make_shared<const KronOp>(polyhardy::adjoint(**it));
      r.ops.push_back(m->second);
    }
    out.chains_.push_back(std::move(r));
  }
  return out;
}

std::size_t OpExpr::cost() const {
  std::size_t c = 0;
  for (const Chain& ch : chains_)
    for (const auto& op : ch.ops) c += op->term_count();
  return c;
}

OpExpr operator*(const OpExpr& a, const OpExpr& b) {
  check_same_shape(a.n_, a.N_, b.n_, b.N_);
  OpExpr out(a.n_, a.N_);
  for (const auto& ca : a.chains_)
    for (const auto& cb : b.chains_) {
      OpExpr::Chain c{ca.scale * cb.scale, ca.ops};
      c.ops.insert(c.ops.end(), cb.ops.begin(), cb.ops.end());
      out.chains_.push_back(std::move(c));
    }
  return out;
}

OpExpr operator+(const OpExpr& a, const OpExpr& b) {
  check_same_shape(a.n_, a.N_, b.n_, b.N_);
  OpExpr out = a;
  out.chains_.insert(out.chains_.end(), b.chains_.begin(), b.chains_.end());
  return out;
}

OpExpr operator*(cplx s, const OpExpr& a) {
  OpExpr out = a;
  for (auto& c : out.chains_) c.scale *= s;
  return out;
}

OpExpr operator-(const OpExpr& a, const OpExpr& b) { return a + cplx(-1.0) * b; }

OpExpr commutator(const OpExpr& a, const OpExpr& b) { return a * b - b * a; }

// ---- norms ----

NormEstimate op_norm_est(const OpExpr& a, const Window& w, int max_iter, std::uint64_t seed,
                         double abs_floor) {
  if (max_iter < 32) throw Error(ErrorCode::invalid_argument, "max_iter must be >= 32");
  const OpExpr adj = a.adjoint();
  CoeffTensor x = CoeffTensor::random(a.n(), a.N(), seed);
  w.apply(x);
  x *= 1.0 / x.norm();

  NormEstimate est;
  double prev = -1.0;
  for (int it = 1; it <= max_iter; ++it) {
    CoeffTensor y = a.apply(x);
    w.apply(y);
    const double sigma = y.norm();
    est.value = sigma;
    est.iterations = it;
    if (sigma == 0.0 || sigma < abs_floor) {
      est.converged = true;
      est.last_rel_change = 0.0;
      return est;
    }
    CoeffTensor z = adj.apply(y);
    w.apply(z);
    const double nz = z.norm();
    if (nz == 0.0) {
      est.converged = true;
      return est;
    }
    z *= 1.0 / nz;
    x = std::move(z);
    if (prev >= 0.0) {
      est.last_rel_change = std::abs(sigma - prev) / sigma;
      if (est.last_rel_change < 1e-9) {
        est.converged = true;
        return est;
      }
    }
    prev = sigma;
  }
  return est;
}

// ---- dense path ----

std::size_t dense_cap() {
  constexpr std::size_t kDefault = 4096;
  const char* env = std::getenv("POLYHARDY_DENSE_CAP");
  if (!env || !*env) return kDefault;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) return kDefault;
  return static_cast<std::size_t>(v);
}

namespace {

std::size_t checked_dim(int n, int N) {
  const std::size_t dim = ipow(N + 1, n);
  const std::size_t cap = dense_cap();
  if (dim > cap) {
    throw Error(ErrorCode::cap_exceeded, "dense dimension " + std::to_string(dim) +
                                             " exceeds cap " + std::to_string(cap));
  }
  return dim;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

std::atomic<std::size_t> g_dense_builds{0};

}  // namespace

std::size_t dense_build_count() { return g_dense_builds.load(); }

DenseOp materialize(const KronOp& a) {
  const std::size_t dim = checked_dim(a.n(), a.N());
  ++g_dense_builds;
  const Mat id = Mat::Identity(a.N() + 1, a.N() + 1);
  DenseOp d = DenseOp::Zero(dim, dim);
  for (const auto& t : a.terms()) {
    Mat k = t.factors[0] ? *t.factors[0] : id;
    for (int ax = 1; ax < a.n(); ++ax) k = kron(k, t.factors[ax] ? *t.factors[ax] : id);
    d += t.scale * k;
  }
  return d;
}

DenseOp materialize(const OpExpr& a) {
  const std::size_t dim = checked_dim(a.n(), a.N());
  std::map<const KronOp*, DenseOp> cache;
  DenseOp d = DenseOp::Zero(dim, dim);
  for (const auto& c : a.chains()) {
    DenseOp p = DenseOp::Identity(dim, dim);
    for (const auto& op : c.ops) {
      auto [it, fresh] = cache.try_emplace(op.get());
      if (fresh) it->second = materialize(*op);
      p = p * it->second;
    }
    d += c.scale * p;
  }
  return d;
}

DenseOp materialize_windowed(const OpExpr& a, const Window& w) {
  const std::size_t dim = checked_dim(a.n(), a.N());
  const std::vector<std::size_t> idx = w.indices();
  const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
  std::map<const KronOp*, DenseOp> cache;
  DenseOp out = DenseOp::Zero(m, m);
  for (const auto& c : a.chains()) {
    Mat x = Mat::Zero(dim, m);
    for (Eigen::Index k = 0; k < m; ++k) x(idx[k], k) = 1.0;
    for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) {
      auto [e, fresh] = cache.try_emplace(it->get());
      if (fresh) e->second = materialize(**it);
      x = e->second * x;
    }
    for (Eigen::Index r = 0; r < m; ++r) out.row(r) += c.scale * x.row(idx[r]);
  }
  return out;
}

DenseOp windowed_matrix(const OpExpr& a, const Window& w) {
  ++g_dense_builds;
  const std::vector<std::size_t> idx = w.indices();
  const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
  const Eigen::Index dim = static_cast<Eigen::Index>(ipow(a.N() + 1, a.n()));
  constexpr Eigen::Index kBlock = 256;
  DenseOp out(m, m);
  for (Eigen::Index k0 = 0; k0 < m; k0 += kBlock) {
    const Eigen::Index nb = std::min(kBlock, m - k0);
    Mat x = Mat::Zero(dim, nb);
    for (Eigen::Index k = 0; k < nb; ++k) x(idx[k0 + k], k) = 1.0;
    const Mat y = a.apply_block(x);
    for (Eigen::Index k = 0; k < nb; ++k)
      for (Eigen::Index r = 0; r < m; ++r) out(r, k0 + k) = y(idx[r], k);
  }
  return out;
}

int numerical_rank(const DenseOp& d, double tol) {
  const EigenResult ev = hermitian_eigenvalues(d.adjoint() * d);
  int r = 0;
  for (Eigen::Index k = 0; k < ev.values.size(); ++k)
    if (ev.values[k] > tol * tol) ++r;
  return r;
}

double spectral_norm(const DenseOp& d) {
  if (d.size() == 0) return 0.0;
  Eigen::BDCSVD<Mat> svd(d);
  return svd.singularValues()(0);
}

}  // namespace polyhardy
