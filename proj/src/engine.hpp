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

#include <chrono>
#include <string>
#include <vector>

#include "polyhardy/kronop.hpp"
#include "polyhardy/verify.hpp"

namespace polyhardy::detail {

enum class Bound { none, lt, gt, ge };

int effective_N(const SubmoduleSpec& s, const CheckOptions& o);
SubmoduleSpec with_N(SubmoduleSpec s, int N);
std::string pair_name(const char* base, int i, int j);

// Accumulates residuals and bounds for one report.
class Engine {
 public:
  Engine(std::string id, const std::vector<const SubmoduleSpec*>& specs, const CheckOptions& o,
         int n, int N, int guard);

  const CheckOptions& opts() const { return o_; }
  const Window& window() const { return win_; }
  int n() const { return n_; }
  int N() const { return N_; }
  int guard() const { return guard_; }

  // Windowed operator norm by power iteration, rechecked densely when small.
  double norm(const std::string& name, const OpExpr& e, Bound b, double thr);
  // Smallest eigenvalue of the windowed Hermitian operator; bound is value >= thr.
  double min_eig(const std::string& name, const OpExpr& e, double thr);
  void value(const std::string& name, double v, Bound b, double thr);
  void predict(const std::string& p) { r_.prediction = p; }
  void note(const std::string& s) { r_.notes.push_back(s); }

  Report finish();

 private:
  struct Judged {
    std::string name;
    double value;
    bool converged;
    Bound bound;
    double thr;
  };

  bool dense_ok() const;

  const CheckOptions& o_;
  int n_, N_, guard_;
  Window win_;
  Report r_;
  std::vector<Judged> judged_;
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace polyhardy::detail
