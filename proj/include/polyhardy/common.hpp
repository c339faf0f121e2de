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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace polyhardy {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

enum class ErrorCode {
  invalid_argument,
  pole_proximity,
  divisibility_ambiguous,
  truncation_infeasible,
  dimension_mismatch,
  index_out_of_range,
  term_limit,
  cap_exceeded,
  unknown_check,
  precondition,
  parse,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Zeros must stay this far inside the unit circle.
inline constexpr double kDiscMargin = 1e-9;

}  // namespace polyhardy
