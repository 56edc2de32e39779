// Copyright 2026 The ratbase Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ratbase/rationalize.hpp"

#include <gtest/gtest.h>

#include "ratbase/morphism.hpp"
#include "test_support.hpp"

namespace ratbase {
namespace {

using testing::Cube;
using testing::CrossPolytope;
using testing::Q;
using testing::SpaceOf;
using testing::V;

TEST(SandwichTest, Examples) {
  SandwichParams cube_params{Q(1, 10), Q(1, 5), Q(1, 2)};
  EXPECT_EQ(SandwichFactor(cube_params), Q(6, 7));
  Ball p = Sandwich(Cube(3), cube_params);
  EXPECT_EQ(p, Scaled(Cube(3), Q(6, 7)));
  EXPECT_TRUE(Contains(p, Scaled(Cube(3), Q(5, 6))));
  EXPECT_TRUE(Contains(Scaled(Cube(3), Q(10, 11)), p));

  SandwichParams cross_params{Q(1, 4), Q(1, 2), Q(3, 4)};
  EXPECT_EQ(SandwichFactor(cross_params), Q(3, 4));
  EXPECT_EQ(Sandwich(CrossPolytope(2), cross_params), Scaled(CrossPolytope(2), Q(3, 4)));
}

TEST(SandwichTest, RejectsBadParameters) {
  EXPECT_THROW(SandwichFactor({Q(0), Q(1, 5), Q(1, 2)}), PreconditionFailed);
  EXPECT_THROW(SandwichFactor({Q(1, 5), Q(1, 5), Q(1, 2)}), PreconditionFailed);
  EXPECT_THROW(SandwichFactor({Q(1, 5), Q(1, 2), Q(1, 2)}), PreconditionFailed);
}

TEST(SymmetrizeSignsTest, Examples) {
  EXPECT_EQ(SymmetrizeSigns(Cube(3)), Cube(3));
  std::vector<Vector> diagonal = {V({1, 1})};
  Ball b = SymmetrizeSigns(diagonal, 2);
  EXPECT_EQ(b.vertices(), (std::vector<Vector>{V({-1, -1}), V({-1, 1}), V({1, -1}), V({1, 1})}));
  EXPECT_EQ(SymmetrizeSigns(testing::Hexagon()), Cube(2));
}

TEST(RationalizeTest, IdentityRenorming) {
  BasedSpace a = SpaceOf(Cube(2), "A");
  std::vector<std::string> all = a.labels();
  RationalizeResult r = RationalizeExtension(a, all, a.ball(), {Q(1, 10), Q(1, 5), Q(1, 2)});
  EXPECT_EQ(r.a_prime, a);
  EXPECT_TRUE(r.report.Passed());
  EXPECT_EQ(r.report.k, 1);
  EXPECT_EQ(r.report.alpha, 1);
  EXPECT_EQ(r.report.beta, 1);
}

TEST(RationalizeTest, CubeWithDiagonalNormOnPlane) {
  BasedSpace a = SpaceOf(Cube(3), "A");
  std::vector<std::string> lambda = {"e1", "e2"};
  Ball lambda_prime = testing::LambdaPrimeBall(Q(1, 2));
  SandwichParams params{Q(1, 2), Q(3, 5), Q(3, 4)};
  RationalizeResult r = RationalizeExtension(a, lambda, lambda_prime, params);
  const RationalizeReport& rep = r.report;
  EXPECT_TRUE(rep.Passed());
  EXPECT_EQ(rep.k, 1);
  EXPECT_EQ(rep.sandwich_factor, Q(7, 11));
  EXPECT_EQ(rep.ku_prime, 1);

  // Independent rebuild of B'_A from the generating set.
  const Ball cube = Cube(3);
  std::vector<Vector> gens;
  for (const Vector& v : lambda_prime.vertices()) gens.push_back(V({v[0], v[1], 0}));
  for (std::size_t b = 0; b < 3; ++b) gens.push_back(UnitVector(3, b));
  for (const Vector& v : cube.vertices()) gens.push_back(Scale(v, Q(7, 11)));
  EXPECT_EQ(r.a_prime.ball().vertices(), testing::ExtremePointsByLp(gens));

  Rat alpha = 0, beta = 0;
  for (const Vector& v : cube.vertices()) alpha = std::max(alpha, testing::GaugeByDecomposition(gens, v));
  for (const Vector& v : r.a_prime.ball().vertices()) {
    for (const Rat& c : v) beta = std::max(beta, Abs(c));
  }
  EXPECT_EQ(rep.alpha, alpha);
  EXPECT_EQ(rep.beta, beta);
  EXPECT_LT(alpha, 1 + params.delta_prime);

  Matrix id = {V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})};
  IsometryMargin m{OperatorNormWitness(a.ball(), r.a_prime.ball(), id).value,
                   MinGainWitness(a.ball(), r.a_prime.ball(), id).value};
  EXPECT_LT(EpsMargin(m), params.eps);
}

// max{|x1|, |x2|, (3/4)(|x1| + |x2|)} on the whole square with delta = 1/5:
// (5/6)(1, 1) has norm 5/4, so the inner bound fails, and (1, 1) has ratio
// exactly 3/2 = 1 + eps, so no renorming agreeing with it is strictly inside.
TEST(RationalizeTest, SquareWithDiagonalNormViolatesInnerBound) {
  BasedSpace a = SpaceOf(Cube(2), "A");
  std::vector<std::string> all = a.labels();
  Ball lambda_prime = testing::LambdaPrimeBall(Q(1, 2));
  SandwichParams params{Q(1, 5), Q(1, 4), Q(1, 2)};
  EXPECT_THROW(RationalizeExtension(a, all, lambda_prime, params), PreconditionFailed);

  RationalizeOptions lenient;
  lenient.enforce_preconditions = false;
  RationalizeResult r = RationalizeExtension(a, all, lambda_prime, params, lenient);
  ASSERT_EQ(r.report.precondition_failures.size(), 1u);
  EXPECT_NE(r.report.precondition_failures[0].find("5/4"), std::string::npos);
  EXPECT_FALSE(r.report.section_equal);
  EXPECT_TRUE(r.report.unit_basis);
  EXPECT_FALSE(r.report.Passed());
  EXPECT_EQ(Gauge(lambda_prime, V({1, 1})), Q(3, 2));
}

TEST(RationalizeTest, RejectsNonOneBasedSpace) {
  BasedSpace hex = SpaceOf(testing::Hexagon());
  std::vector<std::string> all = hex.labels();
  EXPECT_THROW(RationalizeExtension(hex, all, hex.ball(), {Q(1, 10), Q(1, 5), Q(1, 2)}), PreconditionFailed);
}

TEST(RationalizePropertyTest, RandomInstancesCertify) {
  testing::RandomRationals rng(4000);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 25; ++trial) {
    const std::size_t n = 2 + rng.Index(2);
    BasedSpace a = OneBasing(testing::RandomSpace(rng, n, 4));
    std::vector<std::string> lambda;
    for (const std::string& l : a.labels()) {
      if (rng.Index(3) != 0) lambda.push_back(l);
    }
    if (lambda.empty()) lambda.push_back(a.labels().back());
    BasedSpace sub = Subspace(a, lambda);
    SandwichParams params{Q(1 + static_cast<long>(rng.Index(4)), 8), 0, 0};
    params.delta_prime = params.delta + Q(1, 16);
    params.eps = params.delta_prime + Q(1, 16);

    std::vector<Vector> pts = Scaled(sub.ball(), 1 / (1 + params.delta)).vertices();
    for (std::size_t k = 0; k < 3; ++k) {
      Vector q = rng.NextVector(sub.dim(), 3, 3);
      if (IsZero(q)) continue;
      pts.push_back(Scale(q, (1 + params.delta) / Gauge(sub.ball(), q)));
    }
    for (std::size_t b = 0; b < sub.dim(); ++b) pts.push_back(UnitVector(sub.dim(), b));
    Ball lambda_prime = Ball::FromPoints(pts, sub.dim());
    bool unit = true;
    for (std::size_t b = 0; b < sub.dim(); ++b) unit = unit && Gauge(lambda_prime, UnitVector(sub.dim(), b)) == 1;
    if (!unit) continue;
    ++checked;
    RationalizeResult r = RationalizeExtension(a, lambda, lambda_prime, params);
    EXPECT_TRUE(r.report.Passed()) << "trial " << trial;
    EXPECT_LE(r.report.beta, 1 + params.delta);
    EXPECT_LE(r.report.alpha, 1 + params.delta_prime);
  }
  EXPECT_GE(checked, 10);
}

}  // namespace
}  // namespace ratbase
