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

#include <optional>
#include <vector>

#include "polyhardy/common.hpp"

namespace polyhardy {

// Finite Blaschke product c * prod (z - a_j) / (1 - conj(a_j) z).
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  explicit BlaschkeProduct(std::vector<cplx> zeros, cplx unimodular = 1.0,
                           double eps_disc = kDiscMargin);

  static BlaschkeProduct factor(cplx alpha) { return BlaschkeProduct({alpha}); }

  const std::vector<cplx>& zeros() const { return zeros_; }
  cplx unimodular() const { return unimodular_; }
  int degree() const { return static_cast<int>(zeros_.size()); }
  double max_modulus() const;
  bool vanishes_at_origin(double tol = 1e-12) const;

  cplx eval(cplx z) const;

  friend bool operator==(const BlaschkeProduct&, const BlaschkeProduct&) = default;

 private:
  std::vector<cplx> zeros_;
  cplx unimodular_ = 1.0;
};

BlaschkeProduct multiply(const BlaschkeProduct& b1, const BlaschkeProduct& b2);

struct Divisibility {
  bool divides = false;
  std::optional<BlaschkeProduct> quotient;
};

// Does b1 divide b2?  Zeros are matched greedily by distance.
Divisibility divides(const BlaschkeProduct& b1, const BlaschkeProduct& b2,
                     double tol);

Vec taylor_coeffs(const BlaschkeProduct& b, int N);

// Takenaka-Malmquist orthonormal basis of the model space, truncated at N.
std::vector<Vec> tm_basis(const BlaschkeProduct& b, int N);

}  // namespace polyhardy
