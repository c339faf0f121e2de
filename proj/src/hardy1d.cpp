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

#include "polyhardy/hardy1d.hpp"

#include <algorithm>
#include <cmath>

namespace polyhardy {

VarMatrix::VarMatrix(Mat m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw Error(ErrorCode::dimension_mismatch, "VarMatrix must be square and nonempty");
  }
}

VarMatrix operator*(const VarMatrix& a, const VarMatrix& b) {
  if (a.m_.rows() != b.m_.rows()) throw Error(ErrorCode::dimension_mismatch, "size mismatch");
  return VarMatrix(a.m_ * b.m_);
}

VarMatrix operator+(const VarMatrix& a, const VarMatrix& b) {
  if (a.m_.rows() != b.m_.rows()) throw Error(ErrorCode::dimension_mismatch, "size mismatch");
  return VarMatrix(a.m_ + b.m_);
}

VarMatrix operator-(const VarMatrix& a, const VarMatrix& b) {
  if (a.m_.rows() != b.m_.rows()) throw Error(ErrorCode::dimension_mismatch, "size mismatch");
  return VarMatrix(a.m_ - b.m_);
}

Vec szego_vector(cplx w, int N) {
  Vec s(N + 1);
  const cplx wc = std::conj(w);
  cplx p = 1.0;
  for (int k = 0; k <= N; ++k, p *= wc) s[k] = p;
  return s;
}

VarMatrix toeplitz_mult(const Vec& c) {
  const Eigen::Index n = c.size();
  Mat t = Mat::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) t.col(k).tail(n - k) = c.head(n - k);
  return VarMatrix(std::move(t));
}

VarMatrix shift_matrix(int N) {
  if (N < 1) throw Error(ErrorCode::invalid_argument, "shift needs N >= 1");
  Mat s = Mat::Zero(N + 1, N + 1);
  for (int k = 0; k < N; ++k) s(k + 1, k) = 1.0;
  return VarMatrix(std::move(s));
}

VarMatrix eval_lambda_matrix(cplx lambda, int N) {
  if (std::abs(lambda) > 1.0 - kDiscMargin) {
    throw Error(ErrorCode::invalid_argument, "evaluation point must lie inside the disc");
  }
  Mat m = Mat::Zero(N + 1, N + 1);
  cplx p = 1.0;
  for (int k = 0; k <= N; ++k, p *= lambda) m(0, k) = p;
  return VarMatrix(std::move(m));
}

double tm_tail(const BlaschkeProduct& b, int N) {
  double tail = 0.0;
  for (const Vec& e : tm_basis(b, N)) tail = std::max(tail, 1.0 - e.squaredNorm());
  return std::max(tail, 0.0);
}

VarMatrix model_projection(const BlaschkeProduct& b, int N, double tail_tol) {
  std::vector<Vec> basis = tm_basis(b, N);
  Mat p = Mat::Zero(N + 1, N + 1);
  for (const Vec& e : basis) {
    if (1.0 - e.squaredNorm() > tail_tol) {
      throw Error(ErrorCode::truncation_infeasible,
                  "model space tail exceeds tolerance at N=" + std::to_string(N));
    }
    p.noalias() += e * e.adjoint();
  }
  return VarMatrix(std::move(p));
}

VarMatrix range_projection(const BlaschkeProduct& b, int N) {
  VarMatrix t = toeplitz_mult(taylor_coeffs(b, N));
  return t * t.adjoint();
}

int default_guard(double r, int N, double tail_tol) {
  int g = 4;
  if (r > 0.0) {
    g = static_cast<int>(std::ceil(std::log(tail_tol * (1.0 - r)) / std::log(r)));
  }
  return std::clamp(g, 4, std::max(4, N / 2));
}

}  // namespace polyhardy
