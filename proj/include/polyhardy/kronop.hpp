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
#include <memory>
#include <vector>

#include "polyhardy/common.hpp"
#include "polyhardy/hardy1d.hpp"

namespace polyhardy {

// Coefficients over {0..N}^n, row-major with variable 1 slowest.
class CoeffTensor {
 public:
  CoeffTensor(int n, int N);

  static CoeffTensor random(int n, int N, std::uint64_t seed);
  // Elementary tensor v_1 (z_1) v_2 (z_2) ... .
  static CoeffTensor product(const std::vector<Vec>& factors);
  static CoeffTensor monomial(int n, int N, const std::vector<int>& degrees);

  int n() const { return n_; }
  int N() const { return N_; }
  std::size_t size() const { return data_.size(); }
  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }
  cplx& operator[](std::size_t k) { return data_[k]; }
  const cplx& operator[](std::size_t k) const { return data_[k]; }
  cplx& at(const std::vector<int>& degrees);
  cplx at(const std::vector<int>& degrees) const;

  Eigen::Map<Vec> vec() { return {data_.data(), static_cast<Eigen::Index>(data_.size())}; }
  Eigen::Map<const Vec> vec() const {
    return {data_.data(), static_cast<Eigen::Index>(data_.size())};
  }

  double norm() const { return vec().norm(); }
  CoeffTensor& operator+=(const CoeffTensor& o);
  CoeffTensor& operator-=(const CoeffTensor& o);
  CoeffTensor& operator*=(cplx s);
  friend CoeffTensor operator+(CoeffTensor a, const CoeffTensor& b) { return a += b; }
  friend CoeffTensor operator-(CoeffTensor a, const CoeffTensor& b) { return a -= b; }
  friend CoeffTensor operator*(cplx s, CoeffTensor a) { return a *= s; }

 private:
  std::size_t flat(const std::vector<int>& degrees) const;
  int n_, N_;
  std::vector<cplx> data_;
};

cplx inner(const CoeffTensor& a, const CoeffTensor& b);  // <a, b>, linear in a

// Projection onto degrees <= max_degree in every variable.
struct Window {
  int n = 0, N = 0, max_degree = 0;

  static Window full(int n, int N) { return {n, N, N}; }
  static Window guarded(int n, int N, int guard) { return {n, N, N - guard}; }

  void apply(CoeffTensor& t) const;
  std::vector<std::size_t> indices() const;
};

// Sum of elementary tensor operators; a null factor is the identity.
class KronOp {
 public:
  using Factor = std::shared_ptr<const Mat>;
  struct Term {
    cplx scale;
    std::vector<Factor> factors;
  };

  static constexpr std::size_t kMaxTerms = 10000;

  KronOp(int n, int N) : n_(n), N_(N) {}
  // Takes terms as given; no merging.
  KronOp(int n, int N, std::vector<Term> terms);
  static KronOp identity(int n, int N);
  static KronOp zero(int n, int N) { return KronOp(n, N); }

  int n() const { return n_; }
  int N() const { return N_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Adds a term, merging with an existing term of identical factors.
  void add_term(cplx scale, std::vector<Factor> factors);

  CoeffTensor apply(const CoeffTensor& t) const;
  // Columns of x are flattened tensors.
  Mat apply_block(const Mat& x) const;
  cplx trace() const;

 private:
  int n_, N_;
  std::vector<Term> terms_;
};

KronOp lift(const VarMatrix& m, int j, int n);
KronOp compose(const KronOp& a, const KronOp& b);
KronOp add(const KronOp& a, const KronOp& b);
KronOp scale(const KronOp& a, cplx s);
KronOp adjoint(const KronOp& a);
KronOp commutator(const KronOp& a, const KronOp& b);
inline KronOp subtract(const KronOp& a, const KronOp& b) { return add(a, scale(b, -1.0)); }
inline cplx trace(const KronOp& a) { return a.trace(); }

inline KronOp operator*(const KronOp& a, const KronOp& b) { return compose(a, b); }
inline KronOp operator+(const KronOp& a, const KronOp& b) { return add(a, b); }
inline KronOp operator-(const KronOp& a, const KronOp& b) { return subtract(a, b); }

// Unexpanded sum of operator products; each chain applies right to left.
class OpExpr {
 public:
  struct Chain {
    cplx scale;
    std::vector<std::shared_ptr<const KronOp>> ops;  // ops[0] is leftmost
  };

  OpExpr(int n, int N) : n_(n), N_(N) {}
  OpExpr(const KronOp& a);  // NOLINT: implicit by design

  int n() const { return n_; }
  int N() const { return N_; }
  const std::vector<Chain>& chains() const { return chains_; }

  CoeffTensor apply(const CoeffTensor& t) const;
  // Columns of x are flattened tensors.
  Mat apply_block(const Mat& x) const;
  OpExpr adjoint() const;
  // Sum of term counts over all KronOps in all chains.
  std::size_t cost() const;

  friend OpExpr operator*(const OpExpr& a, const OpExpr& b);
  friend OpExpr operator+(const OpExpr& a, const OpExpr& b);
  friend OpExpr operator-(const OpExpr& a, const OpExpr& b);
  friend OpExpr operator*(cplx s, const OpExpr& a);

 private:
  int n_, N_;
  std::vector<Chain> chains_;
};

OpExpr commutator(const OpExpr& a, const OpExpr& b);

struct NormEstimate {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
  double last_rel_change = 0.0;
};

// sqrt of the top eigenvalue of (WAW)^*(WAW) by seeded power iteration.
// Estimates below abs_floor count as converged.
NormEstimate op_norm_est(const OpExpr& a, const Window& w, int max_iter = 200,
                         std::uint64_t seed = 42, double abs_floor = 0.0);

using DenseOp = Mat;

// Dense-dimension cap; POLYHARDY_DENSE_CAP overrides the default 4096.
std::size_t dense_cap();

DenseOp materialize(const KronOp& a);
DenseOp materialize(const OpExpr& a);
// W A W restricted to the window coordinates, evaluated densely.
DenseOp materialize_windowed(const OpExpr& a, const Window& w);
// Same restriction assembled from matrix-free applications.
DenseOp windowed_matrix(const OpExpr& a, const Window& w);
// Process-wide number of dense operator builds (materialize, windowed_matrix).
std::size_t dense_build_count();

struct EigenResult {
  Eigen::VectorXd values;  // ascending
  int sweeps = 0;
  bool converged = false;
};

// Cyclic Jacobi for Hermitian matrices.
EigenResult hermitian_eigenvalues(const Mat& a, double off_tol = 1e-12, int max_sweeps = 60);

int numerical_rank(const DenseOp& d, double tol);
double spectral_norm(const DenseOp& d);

}  // namespace polyhardy
