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

#include "ratbase/rational.hpp"

#include <gtest/gtest.h>

#include "ratbase/errors.hpp"
#include "test_support.hpp"

namespace ratbase {
namespace {

using testing::Q;
using testing::V;

TEST(RationalTest, ParseCanonicalizes) {
  EXPECT_EQ(ParseRat("6/4"), Q(3, 2));
  EXPECT_EQ(ParseRat("-3/5"), Q(-3, 5));
  EXPECT_EQ(ParseRat(" 7 "), Q(7));
  EXPECT_EQ(ParseRat("0/9"), Q(0));
}

TEST(RationalTest, ParseRejectsMalformed) {
  EXPECT_THROW(ParseRat("1/0"), ParseError);
  EXPECT_THROW(ParseRat("1.5"), ParseError);
  EXPECT_THROW(ParseRat("3/-4"), ParseError);
  EXPECT_THROW(ParseRat(""), ParseError);
  EXPECT_THROW(ParseRat("/2"), ParseError);
}

TEST(RationalTest, FormatOmitsUnitDenominator) {
  EXPECT_EQ(ToString(Q(59, 35)), "59/35");
  EXPECT_EQ(ToString(Q(-4, 2)), "-2");
  EXPECT_EQ(ToString(Q(0)), "0");
}

TEST(RationalTest, VectorRoundTrip) {
  Vector v = ParseVector("8/5,8/5,-3/5");
  EXPECT_EQ(v, V({Q(8, 5), Q(8, 5), Q(-3, 5)}));
  EXPECT_EQ(ToString(v), "(8/5, 8/5, -3/5)");
}

TEST(RationalTest, RankDetectsDependence) {
  EXPECT_EQ(Rank(std::vector<Vector>{V({1, 0}), V({2, 0})}), 1u);
  EXPECT_EQ(Rank(std::vector<Vector>{V({1, 1}), V({1, -1})}), 2u);
  EXPECT_EQ(Rank(std::vector<Vector>{V({1, 2, 3}), V({2, 4, 6}), V({0, 0, 1})}), 2u);
}

TEST(RationalTest, PrimitiveDirectionClearsDenominators) {
  EXPECT_EQ(PrimitiveDirection(V({Q(1, 2), Q(-3, 4), 0})), V({2, -3, 0}));
  EXPECT_EQ(PrimitiveDirection(V({4, 6})), V({2, 3}));
  EXPECT_EQ(PrimitiveDirection(V({0, 0})), V({0, 0}));
}

TEST(RationalTest, SimplestBetweenPicksSmallestDenominator) {
  EXPECT_EQ(SimplestBetween(Q(5, 6), Q(10, 11)), Q(6, 7));
  EXPECT_EQ(SimplestBetween(Q(2, 3), Q(4, 5)), Q(3, 4));
  EXPECT_EQ(SimplestBetween(Q(1, 10), Q(1, 5)), Q(1, 6));
  EXPECT_EQ(SimplestBetween(Q(-1, 2), Q(1, 3)), Q(0));
  EXPECT_EQ(SimplestBetween(Q(3, 2), Q(7, 2)), Q(2));
  EXPECT_EQ(SimplestBetween(Q(-7, 2), Q(-3, 2)), Q(-2));
}

TEST(RationalTest, SimplestBetweenMatchesBruteForce) {
  testing::RandomRationals rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Rat a = rng.Next(20, 12), b = rng.Next(20, 12);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    Rat got = SimplestBetween(a, b);
    ASSERT_TRUE(a < got && got < b);
    // No fraction with a smaller denominator lies strictly inside.
    for (long q = 1; q < got.get_den().get_si(); ++q) {
      Rat aq = a * q, bq = b * q;
      mpz_class lo, hi;
      mpz_fdiv_q(lo.get_mpz_t(), aq.get_num_mpz_t(), aq.get_den_mpz_t());
      mpz_fdiv_q(hi.get_mpz_t(), bq.get_num_mpz_t(), bq.get_den_mpz_t());
      for (mpz_class p = lo; p <= hi + 1; ++p) {
        Rat c(p, q);
        c.canonicalize();
        EXPECT_FALSE(a < c && c < b) << ToString(c) << " in (" << ToString(a) << ", " << ToString(b) << ")";
      }
    }
  }
}

}  // namespace
}  // namespace ratbase
