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

#include <random>

#include "polyhardy/kronop.hpp"

namespace polyhardy {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

CoeffTensor::CoeffTensor(int n, int N) : n_(n), N_(N) {
  if (n < 1 || N < 0) throw Error(ErrorCode::invalid_argument, "bad tensor shape");
  data_.assign(ipow(N + 1, n), 0.0);
}

CoeffTensor CoeffTensor::random(int n, int N, std::uint64_t seed) {
  CoeffTensor t(n, N);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  for (auto& x : t.data_) x = {g(rng), g(rng)};
  return t;
}

CoeffTensor CoeffTensor::product(const std::vector<Vec>& f) {
  if (f.empty()) throw Error(ErrorCode::invalid_argument, "empty product");
  const int N = static_cast<int>(f[0].size()) - 1;
  CoeffTensor t(static_cast<int>(f.size()), N);
  t.data_[0] = 1.0;
  std::size_t len = 1;
  for (const Vec& v : f) {
    if (v.size() != N + 1) throw Error(ErrorCode::dimension_mismatch, "factor length mismatch");
    // Expand in place: new index = old * (N+1) + k.
    for (std::size_t i = len; i-- > 0;) {
      cplx x = t.data_[i];
      for (int k = N; k >= 0; --k) t.data_[i * (N + 1) + k] = x * v[k];
    }
    len *= N + 1;
  }
  return t;
}

CoeffTensor CoeffTensor::monomial(int n, int N, const std::vector<int>& degrees) {
  CoeffTensor t(n, N);
  t.at(degrees) = 1.0;
  return t;
}

std::size_t CoeffTensor::flat(const std::vector<int>& d) const {
  if (static_cast<int>(d.size()) != n_) throw Error(ErrorCode::dimension_mismatch, "index arity");
  std::size_t k = 0;
  for (int x : d) {
    if (x < 0 || x > N_) throw Error(ErrorCode::index_out_of_range, "degree out of range");
    k = k * (N_ + 1) + x;
  }
  return k;
}

cplx& CoeffTensor::at(const std::vector<int>& d) { return data_[flat(d)]; }
cplx CoeffTensor::at(const std::vector<int>& d) const { return data_[flat(d)]; }

CoeffTensor& CoeffTensor::operator+=(const CoeffTensor& o) {
  if (o.n_ != n_ || o.N_ != N_) throw Error(ErrorCode::dimension_mismatch, "tensor shape");
  vec() += o.vec();
  return *this;
}

CoeffTensor& CoeffTensor::operator-=(const CoeffTensor& o) {
  if (o.n_ != n_ || o.N_ != N_) throw Error(ErrorCode::dimension_mismatch, "tensor shape");
  vec() -= o.vec();
  return *this;
}

CoeffTensor& CoeffTensor::operator*=(cplx s) {
  vec() *= s;
  return *this;
}

cplx inner(const CoeffTensor& a, const CoeffTensor& b) { return b.vec().dot(a.vec()); }

void Window::apply(CoeffTensor& t) const {
  if (max_degree >= N) return;
  const std::size_t stride = N + 1;
  for (std::size_t k = 0; k < t.size(); ++k) {
    std::size_t r = k;
    for (int a = 0; a < n; ++a, r /= stride) {
      if (static_cast<int>(r % stride) > max_degree) {
        t[k] = 0.0;
        break;
      }
    }
  }
}

std::vector<std::size_t> Window::indices() const {
  std::vector<std::size_t> out;
  const std::size_t stride = N + 1;
  const std::size_t total = ipow(stride, n);
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t r = k;
    bool inside = true;
    for (int a = 0; a < n && inside; ++a, r /= stride)
      inside = static_cast<int>(r % stride) <= max_degree;
    if (inside) out.push_back(k);
  }
  return out;
}

}  // namespace polyhardy
