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

#include "polyhardy/blaschke.hpp"
#include "polyhardy/common.hpp"

namespace polyhardy {

// Square matrix acting on one variable's coefficient axis (degrees 0..N).
class VarMatrix {
 public:
  explicit VarMatrix(Mat m);

  static VarMatrix identity(int N) { return VarMatrix(Mat::Identity(N + 1, N + 1)); }

  int degree_bound() const { return static_cast<int>(m_.rows()) - 1; }
  const Mat& mat() const { return m_; }
  VarMatrix adjoint() const { return VarMatrix(m_.adjoint()); }

  friend VarMatrix operator*(const VarMatrix& a, const VarMatrix& b);
  friend VarMatrix operator+(const VarMatrix& a, const VarMatrix& b);
  friend VarMatrix operator-(const VarMatrix& a, const VarMatrix& b);

 private:
  Mat m_;
};

inline constexpr double kTailTol = 1e-10;

Vec szego_vector(cplx w, int N);
VarMatrix toeplitz_mult(const Vec& coeffs);
VarMatrix shift_matrix(int N);
VarMatrix eval_lambda_matrix(cplx lambda, int N);

// Projection onto the model space of b.
VarMatrix model_projection(const BlaschkeProduct& b, int N, double tail_tol = kTailTol);

// T_b T_b^*, the projection onto b H^2 compressed to degrees <= N.
VarMatrix range_projection(const BlaschkeProduct& b, int N);

// Largest squared tail mass of the truncated Takenaka-Malmquist vectors.
double tm_tail(const BlaschkeProduct& b, int N);

// Window guard: smallest g with r^g / (1 - r) < tail_tol, clamped to [4, N/2].
int default_guard(double r, int N, double tail_tol = kTailTol);

}  // namespace polyhardy
