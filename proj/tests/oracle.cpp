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

#include "oracle.hpp"

#include <cmath>
#include <random>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace oracle {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat dense(const polyhardy::KronOp& a) {
  const Eigen::Index d = a.N() + 1;
  Eigen::Index dim = 1;
  for (int k = 0; k < a.n(); ++k) dim *= d;
  Mat out = Mat::Zero(dim, dim);
  for (const auto& t : a.terms()) {
    Mat m = Mat::Identity(1, 1);
    for (const auto& f : t.factors) m = kron(m, f ? *f : Mat(Mat::Identity(d, d)));
    out += t.scale * m;
  }
  return out;
}

Vec series_divide(const Vec& num, const Vec& den, int N) {
  Vec q = Vec::Zero(N + 1);
  Vec r = Vec::Zero(N + 1);
  r.head(std::min<Eigen::Index>(num.size(), N + 1)) = num.head(std::min<Eigen::Index>(num.size(), N + 1));
  for (int k = 0; k <= N; ++k) {
    q(k) = r(k) / den(0);
    for (int j = 0; j < den.size() && k + j <= N; ++j) r(k + j) -= q(k) * den(j);
  }
  return q;
}

Vec taylor(const std::vector<cplx>& zeros, cplx c, int N) {
  Vec acc = Vec::Zero(N + 1);
  acc(0) = c;
  for (cplx a : zeros) {
    Vec num(2), den(2);
    num << -a, 1.0;
    den << 1.0, -std::conj(a);
    const Vec f = series_divide(num, den, N);
    Vec next = Vec::Zero(N + 1);
    for (int i = 0; i <= N; ++i)
      for (int j = 0; i + j <= N; ++j) next(i + j) += acc(i) * f(j);
    acc = next;
  }
  return acc;
}

Mat model_projection(const std::vector<cplx>& zeros, int N, int M) {
  Mat cols(M + 1, static_cast<Eigen::Index>(zeros.size()));
  std::vector<std::pair<cplx, int>> seen;
  for (std::size_t z = 0; z < zeros.size(); ++z) {
    const cplx a = zeros[z];
    int p = 0;
    for (auto& s : seen)
      if (s.first == a) p = ++s.second;
    if (p == 0) seen.emplace_back(a, 0);
    // p-th derivative in conj(a) of sum conj(a)^k z^k
    for (int k = 0; k <= M; ++k) {
      double fall = 1.0;
      for (int q = 0; q < p; ++q) fall *= (k - q);
      cols(k, z) = (k < p) ? cplx(0.0) : fall * std::pow(std::conj(a), k - p);
    }
  }
  Eigen::HouseholderQR<Mat> qr(cols);
  const Mat q = (qr.householderQ() * Mat::Identity(M + 1, cols.cols())).topRows(N + 1);
  return q * q.adjoint();
}

std::vector<Eigen::Index> window_indices(int n, int N, int g) {
  std::vector<Eigen::Index> idx;
  Eigen::Index dim = 1;
  for (int k = 0; k < n; ++k) dim *= N + 1;
  for (Eigen::Index f = 0; f < dim; ++f) {
    Eigen::Index rest = f;
    bool ok = true;
    for (int k = 0; k < n; ++k) {
      if (rest % (N + 1) > N - g) ok = false;
      rest /= N + 1;
    }
    if (ok) idx.push_back(f);
  }
  return idx;
}

Mat window_block(const Mat& a, int n, int N, int g) {
  const auto idx = window_indices(n, N, g);
  const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
  Mat b(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) b(i, j) = a(idx[i], idx[j]);
  return b;
}

double window_norm(const Mat& a, int n, int N, int g) {
  const Mat b = window_block(a, n, N, g);
  if (b.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(b);
  return svd.singularValues()(0);
}

polyhardy::KronOp random_kronop(int n, int N, int terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::uniform_int_distribution<int> kind(0, 4);
  const Eigen::Index d = N + 1;
  auto gauss = [&](Eigen::Index r, Eigen::Index c) {
    Mat m(r, c);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = cplx(g(rng), g(rng)) / std::sqrt(2.0 * d);
    return m;
  };
  std::vector<polyhardy::KronOp::Term> ts;
  for (int t = 0; t < terms; ++t) {
    polyhardy::KronOp::Term term{cplx(g(rng), g(rng)), {}};
    for (int k = 0; k < n; ++k) {
      Mat m;
      switch (kind(rng)) {
        case 0: term.factors.push_back(nullptr); continue;
        case 1: m = gauss(d, d); break;
        case 2: m = Mat::Zero(d, d); m.diagonal(-1).setConstant(cplx(g(rng), g(rng))); break;
        case 3: m = Mat::Identity(d, d) + gauss(d, 2) * gauss(2, d); break;
        default: m = gauss(d, 3) * gauss(3, d); break;
      }
      term.factors.push_back(std::make_shared<const Mat>(m));
    }
    ts.push_back(std::move(term));
  }
  return polyhardy::KronOp(n, N, std::move(ts));
}

}  // namespace oracle
