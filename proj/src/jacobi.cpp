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
#include <cmath>

#include "polyhardy/kronop.hpp"

namespace polyhardy {

EigenResult hermitian_eigenvalues(const Mat& input, double off_tol, int max_sweeps) {
  if (input.rows() != input.cols()) throw Error(ErrorCode::dimension_mismatch, "not square");
  Mat a = 0.5 * (input + input.adjoint());
  const Eigen::Index n = a.rows();
  EigenResult res;
  const double fro = a.norm();
  const double thresh = off_tol * std::max(fro, 1e-300);
  // Entries this small are left alone; together they stay below thresh.
  const double skip2 = thresh * thresh / std::max<double>(1.0, double(n) * double(n));

  for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
    double off2 = 0.0;
    for (Eigen::Index q = 0; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) off2 += 2.0 * std::norm(a(p, q));
    if (std::sqrt(off2) < thresh) {
      res.converged = true;
      break;
    }
    if (sweep == max_sweeps) break;
    res.sweeps = sweep + 1;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double m2 = std::norm(apq);
        if (m2 <= skip2) continue;
        const double m = std::sqrt(m2);
        const cplx u = apq / m;
        const double theta = 0.5 * std::atan2(2.0 * m, a(q, q).real() - a(p, p).real());
        const double c = std::cos(theta), s = std::sin(theta);
        const cplx suc = s * std::conj(u), cuc = c * std::conj(u);

        // Two-sided update: rotate columns, then mirror rows by hermiticity.
        const double app = a(p, p).real(), aqq = a(q, q).real();
        {
          auto cp = a.col(p), cq = a.col(q);
          const Eigen::VectorXcd xp = cp;
          cp = c * xp - suc * cq;
          cq = s * xp + cuc * cq;
        }
        a.row(p) = a.col(p).adjoint();
        a.row(q) = a.col(q).adjoint();
        const double cs = 2.0 * c * s * m;
        a(p, p) = c * c * app + s * s * aqq - cs;
        a(q, q) = s * s * app + c * c * aqq + cs;
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }
  res.values = a.diagonal().real();
  std::sort(res.values.data(), res.values.data() + n);
  return res;
}

}  // namespace polyhardy
