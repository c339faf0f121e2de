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

#include "polyhardy/polyhardy.h"

#include <sstream>
#include <string>
#include <vector>

#include "polyhardy/report.hpp"
#include "polyhardy/spec_io.hpp"
#include "polyhardy/verify.hpp"

struct ph_spec_list {
  std::vector<polyhardy::SubmoduleSpec> specs;
};

struct ph_report_list {
  std::vector<polyhardy::Report> reports;
  std::vector<std::vector<std::string>> names;
  std::string json;
};

namespace {

thread_local std::string g_error;

ph_status to_status(polyhardy::ErrorCode c) {
  using polyhardy::ErrorCode;
  switch (c) {
    case ErrorCode::invalid_argument:
    case ErrorCode::pole_proximity:
    case ErrorCode::index_out_of_range: return PH_ERR_INVALID_ARGUMENT;
    case ErrorCode::parse: return PH_ERR_PARSE;
    case ErrorCode::io: return PH_ERR_IO;
    case ErrorCode::truncation_infeasible: return PH_ERR_TRUNCATION_INFEASIBLE;
    case ErrorCode::divisibility_ambiguous: return PH_ERR_DIVISIBILITY_AMBIGUOUS;
    case ErrorCode::dimension_mismatch:
    case ErrorCode::term_limit:
    case ErrorCode::cap_exceeded: return PH_ERR_DIMENSION;
    case ErrorCode::unknown_check: return PH_ERR_UNKNOWN_CHECK;
    case ErrorCode::precondition: return PH_ERR_PRECONDITION;
  }
  return PH_ERR_INTERNAL;
}

template <class F>
ph_status guarded(F&& f) {
  try {
    f();
    g_error.clear();
    return PH_OK;
  } catch (const polyhardy::Error& e) {
    g_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_error = e.what();
    return PH_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown failure";
    return PH_ERR_INTERNAL;
  }
}

polyhardy::CheckOptions convert(const ph_options* in) {
  ph_options d;
  ph_options_default(&d);
  const ph_options& o = in ? *in : d;
  polyhardy::CheckOptions c;
  c.N = o.n_trunc;
  c.guard = o.guard;
  c.tol = o.tol;
  c.seed = o.seed;
  c.max_iter = o.max_iter;
  c.timing = o.timing != 0;
  return c;
}

ph_report_list* wrap(std::vector<polyhardy::Report> rs) {
  auto* l = new ph_report_list;
  for (const auto& r : rs) {
    std::vector<std::string> names;
    for (const auto& kv : r.residuals) names.push_back(kv.first);
    l->names.push_back(std::move(names));
  }
  l->reports = std::move(rs);
  return l;
}

const polyhardy::Report* at(const ph_report_list* l, size_t k) {
  return (l && k < l->reports.size()) ? &l->reports[k] : nullptr;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

extern "C" {

const char* ph_last_error(void) { return g_error.c_str(); }

void ph_options_default(ph_options* o) {
  if (!o) return;
  o->n_trunc = 0;
  o->guard = -1;
  o->tol = 1e-8;
  o->seed = 42;
  o->max_iter = 200;
  o->timing = 0;
}

ph_status ph_spec_list_load(const char* path, ph_spec_list** out) {
  return guarded([&] {
    if (!path || !out) throw polyhardy::Error(polyhardy::ErrorCode::invalid_argument, "null argument");
    *out = new ph_spec_list{polyhardy::load_specs(path)};
  });
}

ph_status ph_spec_list_parse(const char* text, ph_spec_list** out) {
  return guarded([&] {
    if (!text || !out) throw polyhardy::Error(polyhardy::ErrorCode::invalid_argument, "null argument");
    *out = new ph_spec_list{polyhardy::parse_specs(text)};
  });
}

size_t ph_spec_list_size(const ph_spec_list* s) { return s ? s->specs.size() : 0; }

double ph_spec_max_zero_modulus(const ph_spec_list* s, size_t k) {
  if (!s || k >= s->specs.size()) return -1.0;
  return s->specs[k].max_zero_modulus();
}

int ph_spec_truncation(const ph_spec_list* s, size_t k) {
  if (!s || k >= s->specs.size()) return -1;
  return s->specs[k].N;
}

ph_status ph_spec_list_append(ph_spec_list* dst, const ph_spec_list* src) {
  return guarded([&] {
    if (!dst || !src) throw polyhardy::Error(polyhardy::ErrorCode::invalid_argument, "null spec list");
    dst->specs.insert(dst->specs.end(), src->specs.begin(), src->specs.end());
  });
}

void ph_spec_list_free(ph_spec_list* s) { delete s; }

ph_status ph_run_checks(const ph_spec_list* specs, const char* checks, const ph_options* opts,
                        ph_report_list** out) {
  return guarded([&] {
    if (!specs || !checks || !out)
      throw polyhardy::Error(polyhardy::ErrorCode::invalid_argument, "null argument");
    *out = wrap(polyhardy::run_checks(specs->specs, split(checks), convert(opts)));
  });
}

ph_status ph_check_one(const ph_spec_list* specs, size_t k, const char* id, const ph_options* opts,
                       ph_report_list** out) {
  return guarded([&] {
    if (!specs || !id || !out || k >= specs->specs.size())
      throw polyhardy::Error(polyhardy::ErrorCode::invalid_argument, "bad argument");
    *out = wrap({polyhardy::check_identity(id, specs->specs[k], convert(opts))});
  });
}

ph_status ph_finite_rank(const ph_spec_list* phi, const ph_spec_list* psi, const ph_options* opts,
                         ph_report_list** out) {
  return guarded([&] {
    if (!phi || !psi || !out || phi->specs.empty() || psi->specs.empty())
      throw polyhardy::Error(polyhardy::ErrorCode::invalid_argument, "bad argument");
    *out = wrap({polyhardy::check_finite_rank_product(phi->specs[0], psi->specs[0],
                                                      convert(opts))});
  });
}

ph_status ph_section4(double alpha, const ph_options* opts, ph_report_list** out) {
  return guarded([&] {
    if (!out) throw polyhardy::Error(polyhardy::ErrorCode::invalid_argument, "null argument");
    *out = wrap({polyhardy::reproduce_section4(alpha, convert(opts))});
  });
}

size_t ph_report_count(const ph_report_list* l) { return l ? l->reports.size() : 0; }

const char* ph_report_check_id(const ph_report_list* l, size_t k) {
  const auto* r = at(l, k);
  return r ? r->check_id.c_str() : nullptr;
}

ph_verdict ph_report_verdict(const ph_report_list* l, size_t k) {
  const auto* r = at(l, k);
  if (!r) return PH_VERDICT_INCONCLUSIVE;
  switch (r->verdict) {
    case polyhardy::Verdict::pass: return PH_VERDICT_PASS;
    case polyhardy::Verdict::fail: return PH_VERDICT_FAIL;
    case polyhardy::Verdict::inconclusive: return PH_VERDICT_INCONCLUSIVE;
    case polyhardy::Verdict::unasserted: return PH_VERDICT_UNASSERTED;
  }
  return PH_VERDICT_INCONCLUSIVE;
}

size_t ph_report_residual_count(const ph_report_list* l, size_t k) {
  return at(l, k) ? l->names[k].size() : 0;
}

const char* ph_report_residual_name(const ph_report_list* l, size_t k, size_t r) {
  if (!at(l, k) || r >= l->names[k].size()) return nullptr;
  return l->names[k][r].c_str();
}

double ph_report_residual_value(const ph_report_list* l, size_t k, size_t r) {
  if (!at(l, k) || r >= l->names[k].size()) return 0.0;
  return l->reports[k].residuals.at(l->names[k][r]);
}

const char* ph_report_prediction(const ph_report_list* l, size_t k) {
  const auto* r = at(l, k);
  return (r && r->prediction) ? r->prediction->c_str() : nullptr;
}

double ph_report_runtime_ms(const ph_report_list* l, size_t k) {
  const auto* r = at(l, k);
  return r ? r->runtime_ms : 0.0;
}

const char* ph_report_list_json(ph_report_list* l) {
  if (!l) return nullptr;
  l->json = polyhardy::reports_to_json(l->reports);
  return l->json.c_str();
}

void ph_report_list_free(ph_report_list* l) { delete l; }

const char* ph_list_checks(void) {
  static const std::string s = [] {
    std::string out;
    for (const auto& id : polyhardy::all_check_names()) out += id + "\n";
    return out;
  }();
  return s.c_str();
}

}  // extern "C"
