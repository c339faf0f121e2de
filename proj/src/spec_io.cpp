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

#include "polyhardy/spec_io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace polyhardy {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw Error(ErrorCode::parse, where + ": " + msg);
}

std::string line_context(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

cplx complex_value(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_object()) fail(where, "expected {\"re\":..,\"im\":..}");
  for (const auto& [k, v] : j.items())
    if (k != "re" && k != "im") fail(where + "." + k, "unknown field");
  if (!j.contains("re")) fail(where, "missing \"re\"");
  double im = j.contains("im") ? number(j["im"], where + ".im") : 0.0;
  return {number(j["re"], where + ".re"), im};
}

BlaschkeProduct blaschke_value(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [k, v] : j.items())
    if (k != "zeros" && k != "unimodular") fail(where + "." + k, "unknown field");
  std::vector<cplx> zeros;
  if (j.contains("zeros")) {
    const json& zs = j["zeros"];
    if (!zs.is_array()) fail(where + ".zeros", "expected an array");
    for (std::size_t k = 0; k < zs.size(); ++k) {
      const std::string w = where + ".zeros[" + std::to_string(k) + "]";
      cplx a = complex_value(zs[k], w);
      if (!(std::abs(a) <= 1.0 - kDiscMargin)) fail(w, "zero is not strictly inside the disc");
      zeros.push_back(a);
    }
  }
  cplx c = 1.0;
  if (j.contains("unimodular")) {
    c = complex_value(j["unimodular"], where + ".unimodular");
    if (std::abs(std::abs(c) - 1.0) > 1e-12) fail(where + ".unimodular", "not unimodular");
  }
  return BlaschkeProduct(std::move(zeros), c);
}

SubmoduleSpec spec_value(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected a spec object");
  for (const auto& [k, v] : j.items())
    if (k != "n" && k != "N" && k != "kind" && k != "generators" && k != "name")
      fail(where + k, "unknown field");
  SubmoduleSpec s;
  if (!j.contains("n")) fail(where + "n", "missing");
  s.n = integer(j["n"], where + "n");
  if (s.n < 2) fail(where + "n", "must be at least 2");
  if (j.contains("N")) {
    s.N = integer(j["N"], where + "N");
    if (s.N < 1) fail(where + "N", "must be positive");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) fail(where + "kind", "missing or not a string");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "inner_sum") {
    s.kind = SubmoduleKind::inner_sum;
  } else if (kind == "beurling_product") {
    s.kind = SubmoduleKind::beurling_product;
  } else {
    fail(where + "kind", "unsupported kind \"" + kind + "\"");
  }
  if (!j.contains("generators") || !j["generators"].is_object())
    fail(where + "generators", "missing or not an object");
  const json& gens = j["generators"];
  if (gens.empty()) fail(where + "generators", "empty generator set");
  for (const auto& [key, val] : gens.items()) {
    const std::string w = where + "generators." + key;
    if (key.empty() || key.size() > 3 || key.find_first_not_of("0123456789") != std::string::npos ||
        (key.size() > 1 && key[0] == '0'))
      fail(w, "variable index must be a positive integer");
    const int idx = std::stoi(key);
    if (idx < 1 || idx > s.n) fail(w, "variable index outside 1.." + std::to_string(s.n));
    BlaschkeProduct b = blaschke_value(val, w);
    if (s.kind == SubmoduleKind::inner_sum && b.degree() == 0)
      fail(w, "inner_sum generators must be non-constant");
    s.generators.emplace(idx, std::move(b));
  }
  return s;
}

}  // namespace

std::vector<SubmoduleSpec> parse_specs(const std::string& text) {
  std::vector<std::set<std::string>> keys;
  std::string duplicate;
  json::parser_callback_t cb = [&](int, json::parse_event_t ev, json& parsed) {
    if (ev == json::parse_event_t::object_start) {
      keys.emplace_back();
    } else if (ev == json::parse_event_t::object_end) {
      if (!keys.empty()) keys.pop_back();
    } else if (ev == json::parse_event_t::key && !keys.empty()) {
      const std::string k = parsed.get<std::string>();
      if (!keys.back().insert(k).second && duplicate.empty()) duplicate = k;
    }
    return true;
  };
  json doc;
  try {
    doc = json::parse(text, cb);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse, "malformed JSON at " + line_context(text, e.byte) + ": " +
                                      e.what());
  }
  if (!duplicate.empty()) throw Error(ErrorCode::parse, "duplicate key \"" + duplicate + "\"");

  std::vector<SubmoduleSpec> out;
  if (doc.is_array()) {
    for (std::size_t k = 0; k < doc.size(); ++k)
      out.push_back(spec_value(doc[k], "[" + std::to_string(k) + "]."));
  } else if (doc.is_object() && doc.contains("specs")) {
    const json& arr = doc["specs"];
    if (!arr.is_array()) fail("specs", "expected an array");
    for (std::size_t k = 0; k < arr.size(); ++k)
      out.push_back(spec_value(arr[k], "specs[" + std::to_string(k) + "]."));
  } else {
    out.push_back(spec_value(doc, ""));
  }
  if (out.empty()) throw Error(ErrorCode::parse, "no specs in document");
  return out;
}

std::vector<SubmoduleSpec> load_specs(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open spec file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_specs(ss.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string canonical_json(const SubmoduleSpec& spec) {
  json j;
  j["n"] = spec.n;
  j["N"] = spec.N;
  j["kind"] = kind_name(spec.kind);
  json gens = json::object();
  for (const auto& [idx, b] : spec.generators) {
    json zs = json::array();
    for (const cplx& a : b.zeros()) zs.push_back({{"re", a.real()}, {"im", a.imag()}});
    gens[std::to_string(idx)] = {
        {"zeros", zs}, {"unimodular", {{"re", b.unimodular().real()}, {"im", b.unimodular().imag()}}}};
  }
  j["generators"] = gens;
  return j.dump();
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::io, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out.push_back(hex[md[k] >> 4]);
    out.push_back(hex[md[k] & 15]);
  }
  return out;
}

std::string fingerprint(const std::vector<const SubmoduleSpec*>& specs) {
  std::string all;
  for (const SubmoduleSpec* s : specs) all += canonical_json(*s) + "\n";
  return sha256_hex(all);
}

}  // namespace polyhardy
