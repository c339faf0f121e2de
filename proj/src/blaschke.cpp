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

#include "polyhardy/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polyhardy {

namespace {

constexpr double kPoleTol = 1e-12;
constexpr double kAmbiguityRatio = 10.0;
constexpr double kSamePoint = 1e-14;

std::string fmt_complex(cplx z) {
  return "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, cplx unimodular,
                                 double eps_disc)
    : zeros_(std::move(zeros)), unimodular_(unimodular) {
  for (const cplx& a : zeros_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
        std::abs(a) > 1.0 - eps_disc) {
      throw Error(ErrorCode::invalid_argument,
                  "zero " + fmt_complex(a) + " is not inside the disc");
    }
  }
  if (std::abs(std::abs(unimodular_) - 1.0) > 1e-12) {
    throw Error(ErrorCode::invalid_argument, "constant is not unimodular");
  }
}

double BlaschkeProduct::max_modulus() const {
  double r = 0.0;
  for (const cplx& a : zeros_) r = std::max(r, std::abs(a));
  return r;
}

bool BlaschkeProduct::vanishes_at_origin(double tol) const {
  return std::any_of(zeros_.begin(), zeros_.end(),
                     [tol](cplx a) { return std::abs(a) < tol; });
}

cplx BlaschkeProduct::eval(cplx z) const {
  if (std::abs(z) > 1.0 + 1e-12) {
    throw Error(ErrorCode::invalid_argument, "evaluation point outside the closed disc");
  }
  cplx v = unimodular_;
  for (const cplx& a : zeros_) {
    cplx den = 1.0 - std::conj(a) * z;
    if (std::abs(den) < kPoleTol) {
      throw Error(ErrorCode::pole_proximity, "evaluation point too close to a pole");
    }
    v *= (z - a) / den;
  }
  return v;
}

BlaschkeProduct multiply(const BlaschkeProduct& b1, const BlaschkeProduct& b2) {
  std::vector<cplx> zs = b1.zeros();
  zs.insert(zs.end(), b2.zeros().begin(), b2.zeros().end());
  return BlaschkeProduct(std::move(zs), b1.unimodular() * b2.unimodular(), 0.0);
}

Divisibility divides(const BlaschkeProduct& b1, const BlaschkeProduct& b2,
                     double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::invalid_argument, "tol must be positive");
  const auto& z1 = b1.zeros();
  const auto& z2 = b2.zeros();

  // A zero whose two nearest distinct candidates are comparably close cannot
  // be matched reliably.
  for (const cplx& a : z1) {
    std::vector<std::pair<double, cplx>> near;
    for (const cplx& c : z2) {
      double d = std::abs(a - c);
      if (d < tol) near.emplace_back(d, c);
    }
    std::sort(near.begin(), near.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t k = 1; k < near.size(); ++k) {
      if (std::abs(near[k].second - near[0].second) <= kSamePoint) continue;
      if (near[k].first < kAmbiguityRatio * near[0].first) {
        throw Error(ErrorCode::divisibility_ambiguous,
                    "ambiguous zero matching near " + fmt_complex(a));
      }
      break;
    }
  }

  struct Pair {
    double d;
    std::size_t i, k;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < z1.size(); ++i)
    for (std::size_t k = 0; k < z2.size(); ++k) {
      double d = std::abs(z1[i] - z2[k]);
      if (d < tol) pairs.push_back({d, i, k});
    }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& x, const Pair& y) { return x.d < y.d; });

  std::vector<bool> used1(z1.size(), false), used2(z2.size(), false);
  std::size_t matched = 0;
  for (const Pair& p : pairs) {
    if (used1[p.i] || used2[p.k]) continue;
    used1[p.i] = used2[p.k] = true;
    ++matched;
  }
  Divisibility out;
  if (matched != z1.size()) return out;
  std::vector<cplx> rest;
  for (std::size_t k = 0; k < z2.size(); ++k)
    if (!used2[k]) rest.push_back(z2[k]);
  out.divides = true;
  out.quotient = BlaschkeProduct(std::move(rest), b2.unimodular() / b1.unimodular(), 0.0);
  return out;
}

Vec taylor_coeffs(const BlaschkeProduct& b, int N) {
  if (N < 0) throw Error(ErrorCode::invalid_argument, "N must be non-negative");
  Vec p = Vec::Zero(N + 1);
  p[0] = b.unimodular();
  Vec q(N + 1);
  for (const cplx& a : b.zeros()) {
    // q = p * (z - a), truncated
    for (int k = N; k >= 0; --k) q[k] = -a * p[k] + (k > 0 ? p[k - 1] : 0.0);
    // p = q / (1 - conj(a) z), truncated
    const cplx ac = std::conj(a);
    p[0] = q[0];
    for (int k = 1; k <= N; ++k) p[k] = q[k] + ac * p[k - 1];
  }
  return p;
}

std::vector<Vec> tm_basis(const BlaschkeProduct& b, int N) {
  if (N < b.degree()) {
    throw Error(ErrorCode::truncation_infeasible, "N is below the Blaschke degree");
  }
  std::vector<Vec> out;
  Vec prefix = Vec::Zero(N + 1);
  prefix[0] = 1.0;
  Vec q(N + 1);
  for (const cplx& a : b.zeros()) {
    const cplx ac = std::conj(a);
    Vec e(N + 1);
    e[0] = prefix[0];
    for (int k = 1; k <= N; ++k) e[k] = prefix[k] + ac * e[k - 1];
    out.push_back(std::sqrt(1.0 - std::norm(a)) * e);
    for (int k = N; k >= 0; --k) q[k] = -a * prefix[k] + (k > 0 ? prefix[k - 1] : 0.0);
    prefix[0] = q[0];
    for (int k = 1; k <= N; ++k) prefix[k] = q[k] + ac * prefix[k - 1];
  }
  return out;
}

}  // namespace polyhardy
