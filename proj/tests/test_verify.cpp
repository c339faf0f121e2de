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

#include <algorithm>
#include <cmath>

#include "polyhardy/spec_io.hpp"
#include "polyhardy/verify.hpp"

using namespace polyhardy;

namespace {

const cplx I1(0.0, 1.0);
const auto kSum = SubmoduleKind::inner_sum;
const auto kProd = SubmoduleKind::beurling_product;

SubmoduleSpec make(SubmoduleKind kind, std::map<int, std::vector<cplx>> g, int N = 32) {
  SubmoduleSpec s;
  s.N = N;
  s.kind = kind;
  for (auto& [j, z] : g) s.generators.emplace(j, BlaschkeProduct(z));
  return s;
}

SubmoduleSpec fixture(const char* name) {
  return load_specs(std::string(POLYHARDY_FIXTURES) + "/" + name + ".json").at(0);
}

bool asserted(const Report& r) { return r.verdict != Verdict::unasserted; }

// Frozen values from tests/oracle/dense_oracle.py (N = 48).
constexpr double kOneVariableFail = 1.0;
constexpr double kBeurlingProductCond2 = 0.56249999999999623;
constexpr double kPairDefectCommutator = 0.49607837082460859;
constexpr double kProjectionNonDivisible = 0.47999999999999948;
constexpr double kWanderingPolySum = 1.0;
constexpr double kIdempotenceB05 = 0.18749999999999933;

}  // namespace

TEST(Frozen, OneVariableBeurlingBothDirections) {
  CheckOptions o;
  const Report pass = check_one_variable_beurling(fixture("one_variable"), 1, o);
  EXPECT_EQ(pass.verdict, Verdict::pass);
  const Report fail = check_one_variable_beurling(fixture("poly_sum"), 1, o);
  EXPECT_EQ(fail.verdict, Verdict::fail);
  EXPECT_NEAR(fail.residuals.at("cond(j=2)"), kOneVariableFail, 1e-6);
}

TEST(Frozen, SumCharacterizationBothDirections) {
  CheckOptions o;
  const Report pass = check_sum_characterization(fixture("blaschke_sum"), {1, 2}, o);
  EXPECT_EQ(pass.verdict, Verdict::pass);
  EXPECT_LT(pass.residuals.at("cond2(i=1,j=2)"), 1e-8);
  const Report fail = check_sum_characterization(fixture("beurling_product"), {1, 2}, o);
  EXPECT_EQ(fail.verdict, Verdict::fail);
  EXPECT_NEAR(fail.residuals.at("cond2(i=1,j=2)"), kBeurlingProductCond2, 1e-6);
  const Report partial = check_sum_characterization(fixture("blaschke_sum"), {1}, o);
  EXPECT_EQ(partial.verdict, Verdict::fail);
  EXPECT_GT(partial.residuals.at("cond1(l=2)"), 0.01);
}

TEST(Frozen, DefectCommuting) {
  CheckOptions o;
  EXPECT_LT(check_defect_commuting(fixture("poly_sum"), 1, 2, o).residuals.at("commutator"), 1e-8);
  EXPECT_LT(check_defect_commuting(fixture("shifted_sum"), 1, 2, o).residuals.at("commutator"), 1e-8);
  const Report r = check_defect_commuting(fixture("blaschke_pair"), 1, 2, o);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.prediction, std::optional<std::string>("non-commute"));
  EXPECT_NEAR(r.residuals.at("commutator"), kPairDefectCommutator, 1e-6);
}

TEST(Frozen, ProjectionCommuting) {
  CheckOptions o;
  const Report div = check_projection_commuting(fixture("phi_b05"), fixture("psi_b05_b03"), o);
  EXPECT_EQ(div.verdict, Verdict::pass);
  EXPECT_LT(div.residuals.at("commutator"), 1e-8);
  const Report nd = check_projection_commuting(fixture("phi_b05"), fixture("psi_bm05"), o);
  EXPECT_EQ(nd.verdict, Verdict::pass);
  EXPECT_NEAR(nd.residuals.at("commutator"), kProjectionNonDivisible, 1e-6);
}

TEST(Frozen, WanderingAndPartialIsometry) {
  CheckOptions o;
  const Report w = check_wandering_nonorthogonality(fixture("poly_sum"), o);
  EXPECT_EQ(w.verdict, Verdict::pass);
  EXPECT_NEAR(w.residuals.at("max"), kWanderingPolySum, 1e-6);
  const Report p = check_partial_isometry(fixture("blaschke_pair"), 1, o);
  EXPECT_EQ(p.verdict, Verdict::pass);
  EXPECT_NEAR(p.residuals.at("idempotence"), kIdempotenceB05, 1e-6);
}

TEST(Section4, ClosedForms) {
  CheckOptions o;
  const Report r = reproduce_section4(0.5, o);
  EXPECT_EQ(r.verdict, Verdict::pass);
  for (const char* k : {"R1R1*f", "R2R2*R1R1*f", "R2R2*f", "R1R1*R2R2*f", "commutator_difference", "adjoint_shift_b"})
    EXPECT_LT(r.residuals.at(k), 1e-8) << k;
  // |c5|^2 = k^3 ((1 + a^2)^2 + 1 - 2 (1 + a^2) k) with k = 1 - a^2.
  const double a2 = 0.25, k = 1.0 - a2;
  const double expect = std::sqrt(k * k * k * ((1 + a2) * (1 + a2) + 1 - 2 * (1 + a2) * k));
  EXPECT_NEAR(r.residuals.at("commutator_norm"), expect, 1e-10);
}

TEST(Section4, SmallAlphaLimit) {
  CheckOptions o;
  const Report r = reproduce_section4(1e-6, o);
  EXPECT_LT(r.residuals.at("commutator_norm"), 1e-5);
  EXPECT_LT(r.residuals.at("commutator_difference"), 1e-8);
  EXPECT_EQ(r.verdict, Verdict::fail);
}

TEST(Section4, Preconditions) {
  CheckOptions o;
  EXPECT_THROW(reproduce_section4(0.9, o), Error);
  EXPECT_THROW(reproduce_section4(0.0, o), Error);
  o.N = 30;
  EXPECT_THROW(reproduce_section4(0.5, o), Error);
}

// Each characterization check must agree with its characterization on a mixed battery.
TEST(Battery, IffChecksAgreeWithPredictions) {
  const std::vector<SubmoduleSpec> battery = {
      make(kSum, {{1, {0.0}}, {2, {0.0}}}),
      make(kSum, {{1, {0.3}}, {2, {0.5}}}),
      make(kSum, {{1, {0.0, 0.4}}, {2, {0.0}}}),
      make(kSum, {{1, {0.5}}}),
      make(kSum, {{2, {0.0, 0.0}}}),
      make(kSum, {{1, {-0.3 * I1}}, {2, {0.2}}}),
      make(kSum, {{1, {0.0}}, {2, {0.4}}}),
      make(kProd, {{1, {0.5}}}),
      make(kProd, {{1, {0.0}}, {2, {0.0}}}),
      make(kProd, {{1, {0.3}}, {2, {0.5}}}),
      make(kProd, {{2, {0.4, 0.2}}}),
      make(kProd, {{1, {0.0, 0.0}}}),
      make(kProd, {{1, {0.2 * I1}}, {2, {0.0}}}),
  };
  CheckOptions o;
  int checked = 0;
  for (const auto& s : battery) {
    const bool single = s.generators.size() == 1;
    for (int i = 1; i <= 2; ++i) {
      const bool expect = single && s.generators.count(i);
      const Report r = check_one_variable_beurling(s, i, o);
      EXPECT_EQ(r.verdict, expect ? Verdict::pass : Verdict::fail) << canonical_json(s) << " i=" << i;
      if (!expect) EXPECT_GT(r.residuals.begin()->second, 0.01);
      ++checked;
    }
    const Report sc = check_sum_characterization(s, s.lambda(), o);
    const bool expect_sum = s.kind == kSum || single;
    EXPECT_EQ(sc.verdict, expect_sum ? Verdict::pass : Verdict::fail) << canonical_json(s);
    if (s.kind == kSum && s.generators.size() == 2) {
      const Report d = check_defect_commuting(s, 1, 2, o);
      EXPECT_EQ(d.verdict, Verdict::pass) << canonical_json(s);
      const bool vanish = s.generators.at(1).vanishes_at_origin() && s.generators.at(2).vanishes_at_origin();
      if (vanish) EXPECT_LT(d.residuals.at("commutator"), 1e-8);
      else EXPECT_GT(d.residuals.at("commutator"), 0.01);
    }
    ++checked;
  }
  EXPECT_GE(checked, 12);
}

TEST(Battery, ProjectionPairs) {
  struct Case {
    std::vector<cplx> phi, psi;
    bool divisible;
  };
  const std::vector<Case> cases = {
      {{0.0}, {0.0, 0.0}, true},   {{0.5}, {0.5, 0.3}, true},  {{0.5}, {-0.5}, false},
      {{0.3, 0.2}, {0.2}, true},   {{0.4 * I1}, {0.4}, false}, {{0.0, 0.1}, {0.1, 0.0, 0.2}, true},
  };
  CheckOptions o;
  for (const auto& c : cases) {
    const auto a = make(kSum, {{1, c.phi}, {2, {0.0}}});
    const auto b = make(kSum, {{1, c.psi}, {2, {0.0}}});
    const Report r = check_projection_commuting(a, b, o);
    EXPECT_EQ(r.verdict, Verdict::pass);
    if (c.divisible) EXPECT_LT(r.residuals.at("commutator"), 1e-8);
    else EXPECT_GT(r.residuals.at("commutator"), 0.01);
  }
}

TEST(Catalog, SmallTruncationAllPass) {
  const std::vector<SubmoduleSpec> specs = {
      make(kSum, {{1, {0.0}}, {2, {0.0}}}, 24),
      make(kSum, {{1, {0.3}}, {2, {0.2 * I1}}}, 24),
      make(kSum, {{1, {0.0, 0.25}}, {2, {0.1}}}, 24),
      make(kProd, {{1, {0.3}}, {2, {0.3}}}, 24),
  };
  CheckOptions o;
  o.guard = 10;
  for (const auto& s : specs)
    for (const auto& id : catalog_ids()) {
      const Report r = check_identity(id, s, o);
      if (asserted(r)) EXPECT_EQ(r.verdict, Verdict::pass) << id << " " << canonical_json(s);
      if (s.kind == kProd && (id == "co_doubly" || id == "cube_compression")) EXPECT_FALSE(asserted(r));
    }
}

TEST(Catalog, UnknownIdAndBadOptions) {
  CheckOptions o;
  try {
    check_identity("no_such_check", make(kSum, {{1, {0.0}}}), o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_check);
  }
  o.tol = 2.0;
  EXPECT_THROW(check_identity("abc", make(kSum, {{1, {0.0}}}), o), Error);
}

TEST(Suite, AllExpansionAndOrdering) {
  CheckOptions o;
  o.N = 16;
  o.guard = 6;
  const auto reports = run_checks({make(kSum, {{1, {0.0}}, {2, {0.0}}}, 16)}, {"all"}, o);
  std::vector<std::string> ids;
  for (const auto& r : reports) ids.push_back(r.check_id);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  for (const auto& id : catalog_ids()) EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  EXPECT_NE(std::find(ids.begin(), ids.end(), "sum_characterization[L={1,2}]"), ids.end());
  EXPECT_THROW(run_checks({make(kSum, {{1, {0.0}}})}, {"bogus"}, o), Error);
}

TEST(FiniteRank, Fixtures) {
  CheckOptions o;
  o.N = 24;
  const struct {
    const char *phi, *psi;
    double rank;
  } cases[] = {{"rank_a_phi", "rank_a_psi", 1}, {"rank_b", "rank_b", 4}, {"rank_c_phi", "rank_c_psi", 1}};
  for (const auto& c : cases) {
    const Report r = check_finite_rank_product(fixture(c.phi), fixture(c.psi), o);
    EXPECT_EQ(r.verdict, Verdict::pass) << c.phi;
    EXPECT_NEAR(r.residuals.at("trace"), c.rank, 1e-6);
    EXPECT_EQ(r.residuals.at("dense_rank"), c.rank);
  }
  EXPECT_THROW(check_finite_rank_product(make(kSum, {{1, {0.0}}}), make(kSum, {{1, {0.0}}}), o), Error);
}
