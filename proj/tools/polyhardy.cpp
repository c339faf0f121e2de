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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyhardy/polyhardy.h"

namespace {

constexpr int kExitUsage = 3;

struct Common {
  int n_trunc = 0;
  double tol = 1e-8;
  int guard = -1;
  unsigned long long seed = 42;
  std::string report;
  std::string format = "text";
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--n-trunc", c.n_trunc, "truncation degree per variable (default: spec N, 48)");
  cmd->add_option("--tol", c.tol, "residual tolerance")->capture_default_str();
  cmd->add_option("--guard", c.guard, "window guard override");
  cmd->add_option("--seed", c.seed, "power iteration seed")->capture_default_str();
  cmd->add_option("--report", c.report, "write the JSON report here");
  cmd->add_option("--format", c.format, "stdout format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_flag("--timing", c.timing, "record runtime_ms in reports");
}

ph_options to_options(const Common& c) {
  ph_options o;
  ph_options_default(&o);
  o.n_trunc = c.n_trunc;
  o.tol = c.tol;
  o.guard = c.guard;
  o.seed = c.seed;
  o.timing = c.timing ? 1 : 0;
  return o;
}

int fail_usage(const std::string& msg) {
  std::cerr << "polyhardy: " << msg << "\n";
  return kExitUsage;
}

int fail_api(ph_status s) {
  std::cerr << "polyhardy: error " << static_cast<int>(s) << ": " << ph_last_error() << "\n";
  return kExitUsage;
}

// Validates suite settings against the loaded specs.
std::string check_config(const Common& c, const std::vector<ph_spec_list*>& specs) {
  if (!(c.tol > 0.0 && c.tol < 1.0)) return "--tol must lie in (0, 1)";
  for (ph_spec_list* l : specs)
    for (size_t k = 0; k < ph_spec_list_size(l); ++k) {
      const int N = c.n_trunc > 0 ? c.n_trunc : ph_spec_truncation(l, k);
      if (N < 8) return "truncation N must be at least 8";
      if (c.guard >= 0 && c.guard < 4 && ph_spec_max_zero_modulus(l, k) > 0.0)
        return "--guard must be at least 4 for specs with nonzero zeros";
      if (c.guard >= N) return "--guard must be below N";
    }
  if (c.n_trunc < 0) return "--n-trunc must be positive";
  return "";
}

int emit(ph_report_list* reports, const Common& c) {
  const char* json = ph_report_list_json(reports);
  if (!c.report.empty()) {
    std::ofstream out(c.report, std::ios::binary);
    if (!out) {
      std::cerr << "polyhardy: cannot write " << c.report << "\n";
      return kExitUsage;
    }
    out << json;
  }
  bool failed = false, unsure = false;
  const size_t n = ph_report_count(reports);
  for (size_t k = 0; k < n; ++k) {
    const ph_verdict v = ph_report_verdict(reports, k);
    failed |= v == PH_VERDICT_FAIL;
    unsure |= v == PH_VERDICT_INCONCLUSIVE;
  }
  if (c.format == "json") {
    std::cout << json;
  } else {
    static const char* names[] = {"pass", "fail", "inconclusive", "unasserted"};
    for (size_t k = 0; k < n; ++k) {
      std::cout << ph_report_check_id(reports, k);
      for (size_t r = 0; r < ph_report_residual_count(reports, k); ++r) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e", ph_report_residual_value(reports, k, r));
        std::cout << ' ' << ph_report_residual_name(reports, k, r) << '=' << buf;
      }
      std::cout << ' ' << names[ph_report_verdict(reports, k)] << "\n";
    }
  }
  ph_report_list_free(reports);
  if (failed) return 1;
  if (unsure) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyhardy: truncated operator checks for polydisc Hardy submodules"};
  app.require_subcommand(1);

  Common vc;
  std::vector<std::string> spec_paths;
  std::string checks = "all";
  auto* verify = app.add_subcommand("verify", "run checks on one or more spec files");
  verify->add_option("--spec", spec_paths, "spec file(s)")->required();
  verify->add_option("--checks", checks, "comma-separated check ids or all")->capture_default_str();
  add_common(verify, vc);

  Common sc;
  double alpha = 0.5;
  auto* section4 = app.add_subcommand("section4", "worked two-variable example");
  section4->add_option("--alpha", alpha, "Blaschke zero")->capture_default_str();
  add_common(section4, sc);

  Common rc;
  std::string phi_path, psi_path;
  auto* rank = app.add_subcommand("rank", "rank of a product of two quotient projections");
  rank->add_option("--spec-phi", phi_path, "first spec file")->required();
  rank->add_option("--spec-psi", psi_path, "second spec file")->required();
  add_common(rank, rc);

  app.add_subcommand("list-checks", "print check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (app.got_subcommand("list-checks")) {
    std::cout << ph_list_checks();
    return 0;
  }

  if (app.got_subcommand("section4")) {
    if (!(sc.tol > 0.0 && sc.tol < 1.0)) return fail_usage("--tol must lie in (0, 1)");
    ph_options o = to_options(sc);
    if (o.n_trunc == 0) o.n_trunc = 48;
    ph_report_list* out = nullptr;
    if (ph_status s = ph_section4(alpha, &o, &out); s != PH_OK) return fail_api(s);
    return emit(out, sc);
  }

  if (app.got_subcommand("rank")) {
    ph_spec_list *phi = nullptr, *psi = nullptr;
    if (ph_status s = ph_spec_list_load(phi_path.c_str(), &phi); s != PH_OK) return fail_api(s);
    if (ph_status s = ph_spec_list_load(psi_path.c_str(), &psi); s != PH_OK) {
      ph_spec_list_free(phi);
      return fail_api(s);
    }
    int code = 0;
    if (std::string err = check_config(rc, {phi, psi}); !err.empty()) {
      code = fail_usage(err);
    } else {
      ph_options o = to_options(rc);
      ph_report_list* out = nullptr;
      ph_status s = ph_finite_rank(phi, psi, &o, &out);
      code = s == PH_OK ? emit(out, rc) : fail_api(s);
    }
    ph_spec_list_free(phi);
    ph_spec_list_free(psi);
    return code;
  }

  // verify: every file contributes its specs, in order.
  std::vector<ph_spec_list*> lists;
  auto release = [&] {
    for (auto* x : lists) ph_spec_list_free(x);
  };
  for (const auto& path : spec_paths) {
    ph_spec_list* l = nullptr;
    if (ph_status s = ph_spec_list_load(path.c_str(), &l); s != PH_OK) {
      release();
      return fail_api(s);
    }
    lists.push_back(l);
  }
  if (std::string err = check_config(vc, lists); !err.empty()) {
    release();
    return fail_usage(err);
  }
  for (size_t k = 1; k < lists.size(); ++k) ph_spec_list_append(lists[0], lists[k]);
  ph_options o = to_options(vc);
  ph_report_list* out = nullptr;
  const ph_status s = ph_run_checks(lists[0], checks.c_str(), &o, &out);
  release();
  return s == PH_OK ? emit(out, vc) : fail_api(s);
}
