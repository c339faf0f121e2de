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

#include <cmath>
#include <cstdio>

#include "engine.hpp"
#include "polyhardy/spec_io.hpp"

namespace polyhardy::detail {

int effective_N(const SubmoduleSpec& s, const CheckOptions& o) { return o.N > 0 ? o.N : s.N; }

SubmoduleSpec with_N(SubmoduleSpec s, int N) {
  s.N = N;
  return s;
}

std::string pair_name(const char* base, int i, int j) {
  return std::string(base) + "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")";
}

Engine::Engine(std::string id, const std::vector<const SubmoduleSpec*>& specs,
               const CheckOptions& o, int n, int N, int guard)
    : o_(o), n_(n), N_(N), guard_(guard), win_(Window::guarded(n, N, guard)),
      t0_(std::chrono::steady_clock::now()) {
  if (!(o.tol > 0.0 && o.tol < 1.0)) throw Error(ErrorCode::invalid_argument, "tol must be in (0,1)");
  if (guard < 0 || guard > N) throw Error(ErrorCode::invalid_argument, "guard must be in [0, N]");
  r_.check_id = std::move(id);
  r_.spec_sha256 = specs.empty() ? sha256_hex("") : fingerprint(specs);
  r_.N = N;
  r_.guard = guard;
  r_.tol = o.tol;
  r_.seed = o.seed;
}

bool Engine::dense_ok() const {
  std::size_t dim = 1;
  for (int k = 0; k < n_; ++k) dim *= static_cast<std::size_t>(N_ + 1);
  return dim <= o_.dense_recheck_cap && dim <= dense_cap();
}

double Engine::norm(const std::string& name, const OpExpr& e, Bound b, double thr) {
  const NormEstimate est = op_norm_est(e, win_, o_.max_iter, o_.seed, 1e-3 * o_.tol);
  r_.residuals[name] = est.value;
  double v = est.value;
  bool conv = est.converged;
  if (!conv) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: power iteration stopped after %d iterations, rel change %.2e",
                  name.c_str(), est.iterations, est.last_rel_change);
    note(buf);
  }
  if (dense_ok()) {
    const double d = spectral_norm(windowed_matrix(e, win_));
    r_.residuals[name + "@dense"] = d;
    if (std::abs(d - est.value) > 1e-6 * d + 1e-12) {
      note(name + ": matrix-free estimate differs from dense value");
    }
    v = d;
    conv = true;
  }
  judged_.push_back({name, v, conv, b, thr});
  return v;
}

double Engine::min_eig(const std::string& name, const OpExpr& e, double thr) {
  const EigenResult ev = hermitian_eigenvalues(windowed_matrix(e, win_));
  const double v = ev.values.size() ? ev.values[0] : 0.0;
  r_.residuals[name] = v;
  if (!ev.converged) note(name + ": Jacobi sweep limit reached");
  judged_.push_back({name, v, ev.converged, Bound::ge, thr});
  return v;
}

void Engine::value(const std::string& name, double v, Bound b, double thr) {
  r_.residuals[name] = v;
  judged_.push_back({name, v, true, b, thr});
}

Report Engine::finish() {
  bool any_bound = false, violated = false, unsure = false;
  for (const Judged& j : judged_) {
    if (j.bound == Bound::none) continue;
    any_bound = true;
    bool holds = false;
    switch (j.bound) {
      case Bound::lt: holds = j.value < j.thr; break;
      case Bound::gt: holds = j.value > j.thr; break;
      case Bound::ge: holds = j.value >= j.thr; break;
      case Bound::none: break;
    }
    // Power iteration only bounds the norm from below, so only some outcomes
    // are final without convergence.
    if (j.converged) {
      violated |= !holds;
    } else if (j.bound == Bound::lt) {
      if (!holds) violated = true; else unsure = true;
    } else if (!holds) {
      unsure = true;
    }
  }
  if (!any_bound) {
    r_.verdict = Verdict::unasserted;
  } else if (violated) {
    r_.verdict = Verdict::fail;
  } else if (unsure) {
    r_.verdict = Verdict::inconclusive;
  } else {
    r_.verdict = Verdict::pass;
  }
  if (o_.timing) {
    r_.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
                        .count();
  }
  return r_;
}

}  // namespace polyhardy::detail
