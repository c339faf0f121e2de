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


#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  bool signaled = false;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("polyhardy_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Outcome run(const std::string& args) {
  const fs::path log = scratch() / "stdout.txt";
  const std::string cmd = std::string(POLYHARDY_CLI) + " " + args + " > " + log.string() + " 2>&1";
  const int st = std::system(cmd.c_str());
  Outcome r;
  if (WIFEXITED(st)) r.code = WEXITSTATUS(st);
  r.signaled = WIFSIGNALED(st);
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string fixture(const char* name) { return std::string(POLYHARDY_FIXTURES) + "/" + name; }

std::string write_tmp(const std::string& name, const std::string& body) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST(Cli, HelpAndListChecks) {
  EXPECT_EQ(run("--help").code, 0);
  const Outcome r = run("list-checks");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("defect_commuting"), std::string::npos);
  EXPECT_NE(r.out.find("section4"), std::string::npos);
}

TEST(Cli, SumFixtureAllChecksPass) {
  const std::string report = (scratch() / "out.json").string();
  const Outcome r = run("verify --spec " + fixture("blaschke_sum.json") +
                    " --checks all --n-trunc 48 --tol 1e-8 --report " + report);
  EXPECT_EQ(r.code, 0) << r.out;
  std::ifstream in(report);
  const auto j = nlohmann::json::parse(in);
  ASSERT_TRUE(j.is_array());
  EXPECT_GT(j.size(), 10u);
  for (const auto& rep : j) EXPECT_EQ(rep.at("verdict"), "pass") << rep.at("check_id");
}

TEST(Cli, FailureGivesExitOne) {
  const Outcome r = run("verify --spec " + fixture("poly_sum.json") +
                    " --checks one_variable_beurling --n-trunc 24 --guard 10");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("fail"), std::string::npos);
}

TEST(Cli, JsonToStdout) {
  const Outcome r = run("verify --spec " + fixture("poly_sum.json") +
                    " --checks sum_characterization --n-trunc 24 --guard 10 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0].at("N"), 24);
  EXPECT_EQ(j[0].at("guard"), 10);
}

TEST(Cli, MultipleSpecsMerge) {
  const Outcome r = run("verify --spec " + fixture("phi_b05.json") + " --spec " + fixture("psi_b05_b03.json") +
                    " --checks projection_commuting --n-trunc 32 --guard 12");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("projection_commuting"), std::string::npos);
}

TEST(Cli, Section4) {
  const Outcome r = run("section4 --alpha 0.5 --n-trunc 48");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("commutator_norm="), std::string::npos);
  EXPECT_EQ(run("section4 --alpha 2").code, 3);
}

TEST(Cli, Rank) {
  const Outcome r = run("rank --spec-phi " + fixture("rank_a_phi.json") + " --spec-psi " +
                    fixture("rank_a_psi.json") + " --n-trunc 24 --guard 10");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("finite_rank_product"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("verify --spec /nonexistent/missing.json").code, 3);
  EXPECT_EQ(run("verify").code, 3);
  EXPECT_EQ(run("frobnicate").code, 3);
  const std::string ok = fixture("poly_sum.json");
  EXPECT_EQ(run("verify --spec " + ok + " --checks nope").code, 3);
  EXPECT_EQ(run("verify --spec " + ok + " --tol 0").code, 3);
  EXPECT_EQ(run("verify --spec " + ok + " --tol abc").code, 3);
  EXPECT_EQ(run("verify --spec " + ok + " --n-trunc 4").code, 3);
  EXPECT_EQ(run("verify --spec " + ok + " --n-trunc 24 --guard 24").code, 3);
  EXPECT_EQ(run("verify --spec " + ok + " --format xml").code, 3);
}

TEST(Cli, BadInputNeverCrashes) {
  const char* bodies[] = {
      "",
      "[",
      "null",
      "[1, 2, 3]",
      "{\"n\": -1, \"kind\": \"inner_sum\", \"generators\": {}}",
      "{\"n\": 2, \"N\": 48, \"kind\": \"inner_sum\", \"generators\": {\"1\": {\"zeros\": [{\"re\": 1.2, \"im\": 0}]}}}",
      "{\"n\": 2, \"N\": 48, \"kind\": \"inner_sum\", \"generators\": {\"7\": {\"zeros\": []}}}",
      "{\"n\": 2, \"N\": 100000000, \"kind\": \"inner_sum\", \"generators\": {\"1\": {\"zeros\": [{\"re\": 0, \"im\": 0}]}}}",
      "{\"n\": 2, \"N\": 48, \"kind\": \"mystery\", \"generators\": {}}",
      "{\"n\": 2, \"N\": 48, \"kind\": \"inner_sum\", \"generators\": {\"1\": {\"zeros\": \"oops\"}}}",
  };
  int k = 0;
  for (const char* body : bodies) {
    const std::string path = write_tmp("bad" + std::to_string(k++) + ".json", body);
    const Outcome r = run("verify --spec " + path + " --checks abc");
    EXPECT_FALSE(r.signaled) << body;
    EXPECT_EQ(r.code, 3) << body << "\n" << r.out;
  }
}
