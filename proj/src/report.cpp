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

#include "polyhardy/report.hpp"

#include <json.hpp>

#include "polyhardy/common.hpp"

namespace polyhardy {

namespace {

using ojson = nlohmann::ordered_json;

ojson to_j(const Report& r) {
  ojson j;
  j["check_id"] = r.check_id;
  j["spec_sha256"] = r.spec_sha256;
  j["N"] = r.N;
  j["guard"] = r.guard;
  j["tol"] = r.tol;
  j["seed"] = r.seed;
  ojson res = ojson::object();
  for (const auto& [k, v] : r.residuals) res[k] = v;
  j["residuals"] = res;
  if (r.prediction) j["prediction"] = *r.prediction;
  j["verdict"] = verdict_name(r.verdict);
  j["runtime_ms"] = r.runtime_ms;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Report from_j(const ojson& j) {
  Report r;
  try {
    r.check_id = j.at("check_id").get<std::string>();
    r.spec_sha256 = j.at("spec_sha256").get<std::string>();
    r.N = j.at("N").get<int>();
    r.guard = j.at("guard").get<int>();
    r.tol = j.at("tol").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& [k, v] : j.at("residuals").items()) r.residuals[k] = v.get<double>();
    if (j.contains("prediction")) r.prediction = j["prediction"].get<std::string>();
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    r.runtime_ms = j.at("runtime_ms").get<double>();
    if (j.contains("notes")) r.notes = j["notes"].get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("bad report: ") + e.what());
  }
  return r;
}

ojson parse(const std::string& text) {
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse, std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::unasserted: return "unasserted";
  }
  return "unasserted";
}

Verdict verdict_from_name(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "inconclusive") return Verdict::inconclusive;
  if (s == "unasserted") return Verdict::unasserted;
  throw Error(ErrorCode::parse, "unknown verdict \"" + s + "\"");
}

std::string report_to_json(const Report& r) { return to_j(r).dump(2) + "\n"; }

std::string reports_to_json(const std::vector<Report>& rs) {
  ojson arr = ojson::array();
  for (const Report& r : rs) arr.push_back(to_j(r));
  return arr.dump(2) + "\n";
}

Report report_from_json(const std::string& text) { return from_j(parse(text)); }

std::vector<Report> reports_from_json(const std::string& text) {
  ojson doc = parse(text);
  if (!doc.is_array()) throw Error(ErrorCode::parse, "expected an array of reports");
  std::vector<Report> out;
  for (const auto& j : doc) out.push_back(from_j(j));
  return out;
}

}  // namespace polyhardy
