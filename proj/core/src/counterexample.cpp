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

#include <string>
#include <vector>

#include "ratbase/errors.hpp"
#include "ratbase/fraisse.hpp"

namespace ratbase {
namespace {

Ball Square() {
  std::vector<Vector> pts = {Vector{Rat(1), Rat(1)}, Vector{Rat(1), Rat(-1)}};
  return Ball::FromPoints(pts, 2);
}

Vector APoint(const Rat& delta) { return Vector{1 + delta, 1 + delta, -delta}; }

}  // namespace

void CheckExampleParams(const CounterexampleParams& p) {
  if (!(0 < p.eta && p.eta < p.eps && p.eps < p.delta)) {
    throw PreconditionFailed("need 0 < eta < eps < delta, got eta=" + ToString(p.eta) + " eps=" + ToString(p.eps) +
                             " delta=" + ToString(p.delta));
  }
  if (p.eps > 1) throw PreconditionFailed("need eps <= 1, got " + ToString(p.eps));
}

void CheckNonUniversalityParams(const CounterexampleParams& p) {
  CheckExampleParams(p);
  if (p.delta > 1) throw PreconditionFailed("need delta <= 1, got " + ToString(p.delta));
  if ((1 + p.eta) * (1 + p.eps) > 1 + p.delta) {
    throw PreconditionFailed("need (1+eta)(1+eps) <= 1+delta, got " + ToString((1 + p.eta) * (1 + p.eps)));
  }
  if ((1 + p.eps) / (1 + p.eta) <= 1 + p.delta / (1 + p.delta)) {
    throw PreconditionFailed("need (1+eps)/(1+eta) > 1 + delta/(1+delta), got " +
                             ToString((1 + p.eps) / (1 + p.eta)) + " vs " + ToString(1 + p.delta / (1 + p.delta)));
  }
}

bool Counterexample::Passed() const {
  bool gauges = gauge_a_point == 1;
  for (const Rat& g : gauge_basis) gauges = gauges && g == 1;
  return gauges && ku <= ku_bound && section_is_square && lambda_prime_one_based && lambda_prime_sandwich;
}

Counterexample BuildCounterexample(const CounterexampleParams& p) {
  CheckExampleParams(p);
  const Rat& d = p.delta;
  std::vector<Vector> pts = {UnitVector(3, 0), UnitVector(3, 1), UnitVector(3, 2),
                             Vector{Rat(1), Rat(-1), Rat(0)}, APoint(d)};
  BasedSpace a(DefaultLabels(3), Ball::FromPoints(pts, 3), "example");

  Rat c = (1 + p.eps) / 2;
  std::vector<Vector> normals = {UnitVector(2, 0), UnitVector(2, 1), Vector{c, c}, Vector{c, -c}};
  Ball lambda_prime = Ball::FromFacets(normals, 2);

  Counterexample out{p, a, lambda_prime, APoint(d), Rat(0), {}, Rat(0), 1 + 2 * d};
  out.gauge_a_point = Gauge(a.ball(), out.a_point);
  for (std::size_t k = 0; k < 3; ++k) out.gauge_basis.push_back(Gauge(a.ball(), UnitVector(3, k)));
  out.ku = UnconditionalConstant(a);

  const std::vector<std::string> lambda = {"e1", "e2"};
  const Ball section = Subspace(a, lambda).ball();
  out.section_is_square = section == Square();

  BasedSpace lp(lambda, lambda_prime, "lambda_prime");
  out.lambda_prime_one_based = Validate(lp).ok() && UnconditionalConstant(lp) == 1;
  out.lambda_prime_sandwich = Contains(section, lambda_prime) && Contains(lambda_prime, Scaled(section, 1 / (1 + p.eps)));
  return out;
}

Rat NonUniversalityBound(const CounterexampleParams& p) {
  return (1 + p.delta) * ((1 + p.eps) / (1 + p.eta) - p.delta / (1 + p.delta));
}

NonUniversalityReport VerifyNonUniversalityBound(const CounterexampleParams& p, const Ball& candidate) {
  CheckNonUniversalityParams(p);
  if (candidate.dim() != 3) throw Error("the candidate ball must be 3-dimensional");
  NonUniversalityReport out;
  out.bound = NonUniversalityBound(p);
  out.one_plus_delta = 1 + p.delta;
  out.bound_exceeds = out.bound > out.one_plus_delta;
  out.gauge_e3 = Gauge(candidate, UnitVector(3, 2));
  out.gauge_e1_plus_e2 = Gauge(candidate, Vector{Rat(1), Rat(1), Rat(0)});
  out.gauge_a_point = Gauge(candidate, APoint(p.delta));
  out.hypotheses_met = out.gauge_e3 == 1 && out.gauge_e1_plus_e2 > (1 + p.eps) / (1 + p.eta);
  out.bound_respected = out.hypotheses_met && out.gauge_a_point >= out.bound;
  return out;
}

}  // namespace ratbase
