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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyhardy {

enum class Verdict { pass, fail, inconclusive, unasserted };

const char* verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& s);

struct Report {
  std::string check_id;
  std::string spec_sha256;
  int N = 0;
  int guard = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::map<std::string, double> residuals;
  std::optional<std::string> prediction;
  Verdict verdict = Verdict::unasserted;
  double runtime_ms = 0.0;
  std::vector<std::string> notes;

  friend bool operator==(const Report&, const Report&) = default;
};

std::string report_to_json(const Report& r);
std::string reports_to_json(const std::vector<Report>& rs);
Report report_from_json(const std::string& text);
std::vector<Report> reports_from_json(const std::string& text);

}  // namespace polyhardy
