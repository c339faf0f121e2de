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

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "polyhardy/blaschke.hpp"
#include "polyhardy/hardy1d.hpp"

using namespace polyhardy;

namespace {

const cplx I1(0.0, 1.0);

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST(Hardy1d, SzegoExamples) {
  EXPECT_LT(max_abs(szego_vector(0.0, 5) - Vec::Unit(6, 0)), 1e-16);
  Vec a(4), b(3);
  a << 1.0, 0.5, 0.25, 0.125;
  b << 1.0, -0.5 * I1, -0.25;
  EXPECT_LT(max_abs(szego_vector(0.5, 3) - a), 1e-16);
  EXPECT_LT(max_abs(szego_vector(0.5 * I1, 2) - b), 1e-16);
}

TEST(Hardy1d, ToeplitzExamples) {
  Vec z(4);
  z << 0.0, 1.0, 0.0, 0.0;
  EXPECT_EQ(toeplitz_mult(z).mat(), shift_matrix(3).mat());
  Vec c = Vec::Zero(5);
  c(0) = 2.0 - I1;
  EXPECT_EQ(toeplitz_mult(c).mat(), Mat((2.0 - I1) * Mat::Identity(5, 5)));
  const Vec tb = taylor_coeffs(BlaschkeProduct({0.5}), 3);
  EXPECT_LT(max_abs(toeplitz_mult(tb).mat() * Vec::Unit(4, 0) - tb), 1e-16);
}

TEST(Hardy1d, ShiftIdentities) {
  const Mat s2 = shift_matrix(2).mat();
  Mat e = Mat::Zero(3, 3);
  e(1, 0) = e(2, 1) = 1.0;
  EXPECT_EQ(s2, e);
  const int N = 10;
  const Mat s = shift_matrix(N).mat();
  const Mat sts = s.adjoint() * s;
  EXPECT_EQ(sts.topLeftCorner(N, N), Mat(Mat::Identity(N, N)));
  EXPECT_EQ(sts(N, N), cplx(0.0));
  Mat e0 = Mat::Zero(N + 1, N + 1);
  e0(0, 0) = 1.0;
  EXPECT_EQ(Mat(Mat::Identity(N + 1, N + 1) - s * s.adjoint()), e0);
  EXPECT_EQ(eval_lambda_matrix(0.0, N).mat(), e0);
  EXPECT_THROW(shift_matrix(0), Error);
}

TEST(Hardy1d, EvalLambda) {
  Vec f = Vec::Zero(6);
  f(0) = f(1) = 1.0;
  const Vec r = eval_lambda_matrix(0.5, 5).mat() * f;
  EXPECT_LT(std::abs(r(0) - 1.5), 1e-15);
  EXPECT_LT(r.tail(5).norm(), 1e-16);
  // Rank one with (lambda^k)^T e_0 = 1: an oblique projection, orthogonal only at 0.
  const Mat e = eval_lambda_matrix(0.5, 5).mat();
  EXPECT_LT(max_abs(e * e - e), 1e-15);
  EXPECT_GT(max_abs(e - e.adjoint()), 0.1);
}

TEST(Hardy1d, ModelProjectionExamples) {
  Mat d1 = Mat::Zero(9, 9), d2 = Mat::Zero(9, 9);
  d1(0, 0) = d2(0, 0) = d2(1, 1) = 1.0;
  EXPECT_LT(max_abs(model_projection(BlaschkeProduct({0.0}), 8).mat() - d1), 1e-15);
  EXPECT_LT(max_abs(model_projection(BlaschkeProduct({0.0, 0.0}), 8).mat() - d2), 1e-15);
  EXPECT_LT(std::abs(model_projection(BlaschkeProduct({0.5}), 60).mat().trace() - 1.0), 1e-12);
}

TEST(Hardy1d, ModelProjectionMatchesKernelOracle) {
  const std::vector<cplx> zs = {0.5, -0.3 * I1, 0.5, cplx(0.1, 0.4)};
  const int N = 48;
  const Mat p = model_projection(BlaschkeProduct(zs), N).mat();
  EXPECT_LT(max_abs(p - oracle::model_projection(zs, N)), 1e-12);
  EXPECT_LT(max_abs(p - p.adjoint()), 1e-15);
  EXPECT_LT(max_abs(p * p - p), 1e-10);
  EXPECT_LT(std::abs(p.trace() - 4.0), 1e-10);
}

TEST(Hardy1d, ModelProjectionAnnihilatesRange) {
  const BlaschkeProduct b({0.6, -0.2});
  const int N = 48;
  const Mat p = model_projection(b, N).mat();
  const Mat t = toeplitz_mult(taylor_coeffs(b, N)).mat();
  EXPECT_LT(max_abs(p * t.leftCols(10)), 1e-10);
}

TEST(Hardy1d, ModelProjectionInfeasible) {
  try {
    model_projection(BlaschkeProduct({0.8}), 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::truncation_infeasible);
  }
}

TEST(Hardy1d, AdjointCompressionExact) {
  const Vec c = taylor_coeffs(BlaschkeProduct({0.4, 0.3 * I1}), 60);
  const int N = 30;
  const Mat small = toeplitz_mult(c.head(N + 1)).mat().adjoint();
  const Mat big = toeplitz_mult(c).mat().adjoint();
  EXPECT_LT(max_abs(small - big.topLeftCorner(N + 1, N + 1)), 1e-16);
  EXPECT_LT(max_abs(big.block(0, 0, 61, N + 1).bottomRows(60 - N)), 1e-16);
}

TEST(Hardy1d, SzegoEigenvector) {
  const BlaschkeProduct phi({0.5, -0.2, 0.3 * I1});
  const int N = 48, g = 24;
  const Mat ta = toeplitz_mult(taylor_coeffs(phi, N)).mat().adjoint();
  for (cplx w : {cplx(0.3), 0.4 * I1, cplx(-0.2, 0.1)}) {
    const Vec s = szego_vector(w, N);
    const Vec d = ta * s - std::conj(phi.eval(w)) * s;
    EXPECT_LT(d.head(N - g + 1).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Hardy1d, OneVariableBeurling) {
  const BlaschkeProduct b({0.5, 0.6});
  const int N = 48, g = 24;
  const Mat t = toeplitz_mult(taylor_coeffs(b, N)).mat();
  const Mat lhs = Mat::Identity(N + 1, N + 1) - model_projection(b, N).mat();
  const Mat d = lhs - t * t.adjoint();
  EXPECT_LT(max_abs(d.topLeftCorner(N - g + 1, N - g + 1)), 1e-10);
  EXPECT_LT(max_abs(range_projection(b, N).mat() - lhs), 1e-12);
}

TEST(Hardy1d, DefaultGuard) {
  EXPECT_EQ(default_guard(0.0, 48), 4);
  EXPECT_EQ(default_guard(0.5, 48), 24);
  EXPECT_EQ(default_guard(0.6, 48), 24);
  EXPECT_EQ(default_guard(0.1, 48), 11);
}

TEST(Hardy1d, VarMatrixAdjointInvolution) {
  Mat m(3, 3);
  m << 1.0, I1, 2.0, 0.5, -I1, 3.0, 0.0, 1.0, I1;
  const VarMatrix v(m);
  EXPECT_EQ(v.adjoint().adjoint().mat(), v.mat());
  EXPECT_THROW(VarMatrix(Mat::Zero(2, 3)), Error);
}
