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

// Test-only reference implementations. Nothing here calls the library's
// dense path or its model-space construction.

#include <cstdint>
#include <vector>

#include "polyhardy/kronop.hpp"

namespace oracle {

using polyhardy::cplx;
using polyhardy::Mat;
using polyhardy::Vec;

// Sum of scale * (f_1 kron f_2 kron ...), identity for absent factors.
Mat dense(const polyhardy::KronOp& a);

// Power series quotient num/den truncated at degree N; den(0) != 0.
Vec series_divide(const Vec& num, const Vec& den, int N);

// Taylor coefficients of c * prod (z - a)/(1 - conj(a) z), one long division per factor.
Vec taylor(const std::vector<cplx>& zeros, cplx c, int N);

// Compression to degree N of the model-space projection, built from
// (derivative) Szego kernels at truncation M and Householder QR.
Mat model_projection(const std::vector<cplx>& zeros, int N, int M = 400);

// Largest singular value of the block on indices with every degree <= N - g.
double window_norm(const Mat& a, int n, int N, int g);
Mat window_block(const Mat& a, int n, int N, int g);

Mat kron(const Mat& a, const Mat& b);

polyhardy::KronOp random_kronop(int n, int N, int terms, std::uint64_t seed);

}  // namespace oracle
