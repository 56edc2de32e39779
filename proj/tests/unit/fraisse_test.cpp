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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ratbase/errors.hpp"
#include "ratbase/fraisse.hpp"
#include "test_support.hpp"

namespace ratbase {
namespace {

using testing::CounterexampleSpace;
using testing::CrossPolytope;
using testing::Cube;
using testing::Hexagon;
using testing::Q;
using testing::RandomRationals;
using testing::SpaceOf;
using testing::V;

Catalog MakeCatalog(std::size_t dim, long den, const Rat& k) {
  CatalogBounds bounds;
  bounds.max_dim = dim;
  bounds.max_denominator = den;
  bounds.k_bound = k;
  return EnumerateSpaces(bounds);
}

const Catalog& SmallCatalog() {
  static const Catalog catalog = MakeCatalog(2, 2, 2);
  return catalog;
}

BasedSpace Interval() { return SpaceOf(Cube(1), "interval"); }

TEST(CatalogTest, OneDimensionalIsTheInterval) {
  Catalog c = MakeCatalog(1, 1, 1);
  ASSERT_EQ(c.spaces.size(), 1u);
  EXPECT_EQ(c.spaces[0].ball(), Cube(1));
}

TEST(CatalogTest, IntegerGridWithUnitConstant) {
  // By hand: the interval, the cross-polytope and the square; both hexagons
  // have K_u = 2.
  Catalog c = MakeCatalog(2, 1, 1);
  ASSERT_EQ(c.spaces.size(), 3u);
  EXPECT_TRUE(FindInCatalog(c, SpaceOf(Cube(2))));
  EXPECT_TRUE(FindInCatalog(c, SpaceOf(CrossPolytope(2))));
  EXPECT_FALSE(FindInCatalog(c, SpaceOf(Hexagon())));
}

TEST(CatalogTest, IntegerGridWithConstantTwoAddsBothHexagons) {
  Catalog c = MakeCatalog(2, 1, 2);
  EXPECT_EQ(c.spaces.size(), 5u);
  EXPECT_TRUE(FindInCatalog(c, SpaceOf(Hexagon())));
  std::vector<Vector> other = {V({1, 0}), V({0, 1}), V({1, -1})};
  EXPECT_TRUE(FindInCatalog(c, SpaceOf(Ball::FromPoints(other, 2))));
}

TEST(CatalogTest, NoRelabeledDuplicates) {
  const Catalog& c = SmallCatalog();
  std::set<std::pair<std::size_t, std::vector<Vector>>> seen;
  for (const BasedSpace& s : c.spaces) {
    EXPECT_TRUE(Validate(s).ok()) << s.name();
    EXPECT_LE(UnconditionalConstant(s), c.bounds.k_bound);
    EXPECT_TRUE(seen.insert({s.dim(), CanonicalForm(s.ball())}).second) << s.name();
    for (const Vector& v : s.ball().vertices()) {
      for (const Rat& x : v) {
        EXPECT_LE(x.get_den(), 2);
        EXPECT_LE(Abs(x), 1);
      }
    }
  }
}

TEST(CatalogTest, ShuffledEnumerationIsIdentical) {
  CatalogBounds bounds = SmallCatalog().bounds;
  for (std::uint64_t seed : {1u, 7u, 12345u}) {
    bounds.shuffle_seed = seed;
    Catalog shuffled = EnumerateSpaces(bounds);
    ASSERT_EQ(shuffled.spaces.size(), SmallCatalog().spaces.size());
    for (std::size_t k = 0; k < shuffled.spaces.size(); ++k) {
      EXPECT_EQ(shuffled.spaces[k], SmallCatalog().spaces[k]);
    }
  }
}

TEST(CatalogTest, CanonicalFormIsPermutationInvariant) {
  std::vector<Vector> pts = {V({1, 0}), V({Q(1, 2), 1})};
  std::vector<Vector> swapped = {V({0, 1}), V({1, Q(1, 2)})};
  EXPECT_EQ(CanonicalForm(Ball::FromPoints(pts, 2)), CanonicalForm(Ball::FromPoints(swapped, 2)));
}

TEST(EmbeddingTest, IntervalIntoSquareHasTwo) {
  auto e = EnumerateEmbeddings(Interval(), SpaceOf(Cube(2), "square"));
  EXPECT_EQ(e.size(), 2u);
}

TEST(EmbeddingTest, CrossIntoSquareHasNone) {
  EXPECT_TRUE(EnumerateEmbeddings(SpaceOf(CrossPolytope(2)), SpaceOf(Cube(2))).empty());
}

TEST(EmbeddingTest, SelfEmbeddingsAreNormPreservingPermutations) {
  BasedSpace hex = SpaceOf(Hexagon());
  auto e = EnumerateEmbeddings(hex, hex);
  // The swap of e1 and e2 preserves conv{±e1, ±e2, ±(1,1)}.
  ASSERT_EQ(e.size(), 2u);
  EXPECT_TRUE(std::any_of(e.begin(), e.end(), [&](const BasedMorphism& f) { return SameLabelMap(f, Identity(hex)); }));
  std::vector<Vector> pts = {V({1, 0}), V({Q(1, 2), 1})};
  BasedSpace skew = SpaceOf(Ball::FromPoints(pts, 2));
  EXPECT_EQ(EnumerateEmbeddings(skew, skew).size(), 1u);
}

TEST(ChainTest, IntervalCatalogStaysConstant) {
  Catalog c = MakeCatalog(1, 1, 1);
  Chain chain = BuildGenericChain(c, 5, Interval());
  EXPECT_EQ(chain.stages.size(), 1u);
  ASSERT_EQ(chain.ledger.size(), 1u);
  EXPECT_EQ(chain.ledger[0].answered_at, std::optional<std::size_t>(0));
  EXPECT_TRUE(chain.ledger[0].verified);
  EXPECT_TRUE(VerifyChain(chain).ok());
}

TEST(ChainTest, SeedMustBeInCatalog) {
  EXPECT_THROW(BuildGenericChain(MakeCatalog(1, 1, 1), 1, SpaceOf(Cube(2))), PreconditionFailed);
}

class SmallChainTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { chain_ = new Chain(BuildGenericChain(SmallCatalog(), 20, Interval())); }
  static void TearDownTestSuite() { delete chain_; }
  static Chain* chain_;
};

Chain* SmallChainTest::chain_ = nullptr;

TEST_F(SmallChainTest, FirstTasksAnsweredWithVerifiedWitnesses) {
  const Chain& chain = *chain_;
  EXPECT_EQ(chain.steps_taken, 20u);
  EXPECT_TRUE(chain.halted.empty()) << chain.halted;
  ASSERT_GE(chain.ledger.size(), 10u);
  for (std::size_t t = 0; t < 10; ++t) {
    EXPECT_TRUE(chain.ledger[t].answered_at.has_value()) << t;
    EXPECT_TRUE(chain.ledger[t].verified) << t;
  }
}

TEST_F(SmallChainTest, VerificationPasses) {
  ChainVerification v = VerifyChain(*chain_);
  EXPECT_TRUE(v.ok());
  for (const std::string& f : v.failures) ADD_FAILURE() << f;
  EXPECT_EQ(v.answered, chain_->answered());
}

TEST_F(SmallChainTest, StagesIncreaseAndStayWithinBound) {
  const Chain& chain = *chain_;
  for (std::size_t k = 0; k + 1 < chain.stages.size(); ++k) {
    const auto& a = chain.stages[k].labels();
    const auto& b = chain.stages[k + 1].labels();
    ASSERT_LT(a.size(), b.size());
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin()));
    EXPECT_TRUE(chain.inclusion_verified[k]);
    // The old stage is the section of the new one. Computing the section
    // needs the facets of the new stage, so only small stages are checked.
    if (b.size() <= 7) EXPECT_EQ(Subspace(chain.stages[k + 1], a).ball(), chain.stages[k].ball()) << k;
  }
  for (const auto& ku : chain.ku) {
    if (ku) EXPECT_LE(*ku, chain.k_bound);
  }
}

TEST_F(SmallChainTest, TamperedWitnessIsRejected) {
  Chain chain = *chain_;
  for (ChainTask& t : chain.ledger) {
    if (!t.witness || t.witness->domain().dim() != 2) continue;
    auto targets = t.witness->targets();
    std::swap(targets[0], targets[1]);
    t.witness = BasedMorphism(t.witness->domain(), t.witness->codomain(), targets);
    break;
  }
  EXPECT_FALSE(VerifyChain(chain).witnesses_valid);
}

TEST(UniversalityTest, FullLambdaReturnsF) {
  Chain chain = BuildGenericChain(SmallCatalog(), 4, Interval());
  const std::size_t before = chain.stages.size();
  BasedSpace a = Interval();
  std::vector<std::string> all = {"e1"};
  BasedMorphism f(Subspace(a, all), chain.stages.back(), std::vector<std::size_t>{0});
  BasedMorphism ext = TestUniversality(chain, a, all, f);
  EXPECT_EQ(chain.stages.size(), before);
  EXPECT_EQ(ext.targets(), f.targets());
}

TEST(UniversalityTest, SquareOverOneAxis) {
  Chain chain = BuildGenericChain(SmallCatalog(), 4, Interval());
  BasedSpace square = SpaceOf(Cube(2), "square");
  std::vector<std::string> lambda = {"e2"};
  BasedSpace sub = Subspace(square, lambda);
  BasedMorphism f(sub, chain.stages[1], std::vector<std::size_t>{chain.stages[1].dim() - 1});
  ASSERT_TRUE(CertifyIsometry(f));
  BasedMorphism ext = TestUniversality(chain, square, lambda, f);
  EXPECT_TRUE(CertifyIsometry(ext));
  EXPECT_EQ(ext.MapLabel("e2"), f.MapLabel("e2"));
  EXPECT_TRUE(VerifyChain(chain).ok());
}

TEST(UniversalityTest, SuccessiveExtensionsCompose) {
  Chain chain = BuildGenericChain(SmallCatalog(), 3, Interval());
  BasedSpace cube = SpaceOf(Cube(3), "cube");
  std::vector<std::string> l1 = {"e1"};
  std::vector<std::string> l2 = {"e1", "e2"};
  BasedSpace s1 = Subspace(cube, l1);
  BasedSpace s2 = Subspace(cube, l2);
  BasedMorphism f(s1, chain.stages[0], std::vector<std::size_t>{0});
  BasedMorphism g = TestUniversality(chain, s2, l1, f);
  BasedMorphism h = TestUniversality(chain, cube, l2, g);
  // h extends g which extends f, so h restricted to e1 lands where f does.
  BasedMorphism through = Compose(h, Inclusion(s1, cube));
  BasedMorphism direct = Compose(Inclusion(f.codomain(), h.codomain()), f);
  EXPECT_TRUE(SameLabelMap(through, direct));
  EXPECT_TRUE(VerifyChain(chain).ok());
}

TEST(UniversalityTest, RejectsNonIsometry) {
  BasedSpace cross = SpaceOf(CrossPolytope(2));
  std::vector<std::string> lambda = {"e1", "e2"};
  BasedSpace square = SpaceOf(Cube(2));
  Chain square_chain;
  square_chain.k_bound = 2;
  square_chain.stages.push_back(square);
  square_chain.ku.push_back(Rat(1));
  BasedMorphism f(Subspace(cross, lambda), square, std::vector<std::size_t>{0, 1});
  EXPECT_THROW(TestUniversality(square_chain, cross, lambda, f), NotIsometric);
}

TEST(UniversalityTest, RejectsLargeConstant) {
  Chain chain;
  chain.k_bound = 1;
  chain.stages.push_back(Interval());
  chain.ku.push_back(Rat(1));
  BasedSpace hex = SpaceOf(Hexagon());
  std::vector<std::string> lambda = {"e1"};
  BasedMorphism f(Subspace(hex, lambda), chain.stages[0], std::vector<std::size_t>{0});
  EXPECT_THROW(TestUniversality(chain, hex, lambda, f), PreconditionFailed);
}

const CounterexampleParams kParams{Q(1, 20), Q(1, 2), Q(3, 5)};

TEST(CounterexampleTest, GoldenParameters) {
  Counterexample c = BuildCounterexample(kParams);
  EXPECT_TRUE(c.Passed());
  EXPECT_EQ(c.gauge_a_point, 1);
  EXPECT_EQ(c.gauge_basis, (std::vector<Rat>{1, 1, 1}));
  EXPECT_EQ(c.ku_bound, Q(11, 5));
  EXPECT_EQ(c.ku, Q(11, 5));
  EXPECT_TRUE(c.section_is_square);
  EXPECT_TRUE(c.lambda_prime_one_based);
  EXPECT_TRUE(c.lambda_prime_sandwich);
  EXPECT_EQ(c.a, CounterexampleSpace(Q(3, 5)));
}

TEST(CounterexampleTest, LambdaPrimeBallVertices) {
  Counterexample c = BuildCounterexample(kParams);
  std::vector<Vector> expected = {V({-1, Q(-1, 3)}), V({-1, Q(1, 3)}), V({Q(-1, 3), -1}), V({Q(-1, 3), 1}),
                                  V({Q(1, 3), -1}),  V({Q(1, 3), 1}),  V({1, Q(-1, 3)}),  V({1, Q(1, 3)})};
  EXPECT_EQ(c.lambda_prime_ball.vertices(), expected);
}

TEST(CounterexampleTest, ParameterChecks) {
  EXPECT_THROW(BuildCounterexample({Q(1, 2), Q(1, 2), Q(3, 5)}), PreconditionFailed);
  EXPECT_THROW(BuildCounterexample({Q(1, 20), Q(3, 2), Q(2)}), PreconditionFailed);
  EXPECT_NO_THROW(CheckNonUniversalityParams(kParams));
  // (1+eta)(1+eps) = 63/40 > 1 + 1/2.
  EXPECT_THROW(CheckNonUniversalityParams({Q(1, 20), Q(1, 2), Q(11, 20)}), PreconditionFailed);
  // (1+eps)/(1+eta) = 11/10 is not above 1 + delta/(1+delta).
  EXPECT_THROW(CheckNonUniversalityParams({Q(1, 10), Q(21, 100), Q(1, 2)}), PreconditionFailed);
}

TEST(CounterexampleTest, BoundValue) {
  EXPECT_EQ(NonUniversalityBound(kParams), Q(59, 35));
  EXPECT_EQ(Q(8, 5) * (Q(10, 7) - Q(3, 8)), Q(59, 35));
  EXPECT_GT(Q(59, 35), Q(8, 5));
}

TEST(CounterexampleTest, OriginalBallFailsHypotheses) {
  NonUniversalityReport r = VerifyNonUniversalityBound(kParams, CounterexampleSpace(Q(3, 5)).ball());
  EXPECT_EQ(r.gauge_e3, 1);
  EXPECT_EQ(r.gauge_e1_plus_e2, 1);
  EXPECT_FALSE(r.hypotheses_met);
  EXPECT_FALSE(r.bound_respected);
  EXPECT_TRUE(r.bound_exceeds);
}

TEST(CounterexampleTest, ScaledExampleRespectsBound) {
  RandomRationals rng(5);
  Ball candidate = testing::RandomNonUniversalityCandidate(rng, kParams, true);
  NonUniversalityReport r = VerifyNonUniversalityBound(kParams, candidate);
  EXPECT_TRUE(r.hypotheses_met);
  EXPECT_TRUE(r.bound_respected);
  EXPECT_GE(r.gauge_a_point, Q(59, 35));
}

TEST(CounterexampleTest, RandomCandidatesRespectBound) {
  RandomRationals rng(2026);
  for (int n = 0; n < 20; ++n) {
    Ball candidate = testing::RandomNonUniversalityCandidate(rng, kParams, false);
    NonUniversalityReport r = VerifyNonUniversalityBound(kParams, candidate);
    ASSERT_TRUE(r.hypotheses_met) << n;
    EXPECT_TRUE(r.bound_respected) << n << " gauge " << ToString(r.gauge_a_point);
    // Triangle inequality, evaluated independently of the report.
    Rat lower = (1 + kParams.delta) * r.gauge_e1_plus_e2 - kParams.delta * r.gauge_e3;
    EXPECT_GE(r.gauge_a_point, lower) << n;
  }
}

}  // namespace
}  // namespace ratbase
