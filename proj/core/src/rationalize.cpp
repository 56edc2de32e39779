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

#include <algorithm>

#include "ratbase/errors.hpp"

namespace ratbase {
namespace {

Rat MaxGauge(const Ball& outer, const std::vector<Vector>& points) {
  Rat best = 0;
  for (const Vector& v : points) best = std::max(best, Gauge(outer, v));
  return best;
}

// Contained, with some vertex of inner strictly inside outer.
bool StrictlyContains(const Ball& outer, const Ball& inner) {
  bool slack = false;
  for (const Vector& v : inner.vertices()) {
    Rat g = Gauge(outer, v);
    if (g > 1) return false;
    if (g < 1) slack = true;
  }
  return slack;
}

std::vector<SignPattern> HalfSignPatterns(std::size_t n) {
  std::vector<SignPattern> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    SignPattern s(n, 1);
    for (std::size_t k = 1; k < n; ++k) {
      if (mask >> (k - 1) & 1) s[k] = -1;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

void CheckSandwichParams(const SandwichParams& p) {
  if (!(0 < p.delta && p.delta < p.delta_prime && p.delta_prime < p.eps)) {
    throw PreconditionFailed("sandwich parameters must satisfy 0 < delta < delta' < eps (got delta=" +
                             ToString(p.delta) + ", delta'=" + ToString(p.delta_prime) + ", eps=" + ToString(p.eps) +
                             ")");
  }
}

Rat SandwichFactor(const SandwichParams& p) {
  CheckSandwichParams(p);
  return SimplestBetween(1 / (1 + p.delta_prime), 1 / (1 + p.delta));
}

Ball Sandwich(const Ball& ball, const SandwichParams& p) {
  Rat c = SandwichFactor(p);
  Ball out = Scaled(ball, c);
  if (!StrictlyContains(out, Scaled(ball, 1 / (1 + p.delta_prime))) ||
      !StrictlyContains(Scaled(ball, 1 / (1 + p.delta)), out)) {
    throw InfeasibleSandwich("scaled ball fails the strict sandwich");
  }
  return out;
}

Ball SymmetrizeSigns(std::span<const Vector> points, std::size_t dim, Budget budget) {
  std::vector<Vector> all;
  for (const SignPattern& s : HalfSignPatterns(dim)) {
    for (const Vector& v : points) all.push_back(ApplySigns(s, v));
  }
  return Ball::FromPoints(all, dim, budget);
}

Ball SymmetrizeSigns(const Ball& ball, Budget budget) { return SymmetrizeSigns(ball.vertices(), ball.dim(), budget); }

RationalizeResult RationalizeExtension(const BasedSpace& a, std::span<const std::string> lambda_labels,
                                       const Ball& lambda_prime_ball, const SandwichParams& p,
                                       const RationalizeOptions& options) {
  CheckSandwichParams(p);
  RationalizeReport report;
  BasedSpace lambda = Subspace(a, lambda_labels);
  if (lambda_prime_ball.dim() != lambda.dim()) {
    throw PreconditionFailed("the Lambda ball has dimension " + std::to_string(lambda_prime_ball.dim()) + ", not " +
                             std::to_string(lambda.dim()));
  }
  BasedSpace lambda_prime(lambda.labels(), lambda_prime_ball);

  Rat ku_a = UnconditionalConstant(a);
  if (ku_a != 1) report.precondition_failures.push_back("A is not 1-based: K_u(A) = " + ToString(ku_a));
  Rat inner = MaxGauge(lambda_prime_ball, Scaled(lambda.ball(), 1 / (1 + p.delta)).vertices());
  if (inner > 1) {
    report.precondition_failures.push_back("(1/(1+delta))B_Lambda is not inside B'_Lambda: a vertex has B'_Lambda norm " +
                                           ToString(inner));
  }
  Rat outer = MaxGauge(lambda.ball(), lambda_prime_ball.vertices());
  if (outer > 1 + p.delta) {
    report.precondition_failures.push_back("B'_Lambda is not inside (1+delta)B_Lambda: a vertex has B_Lambda norm " +
                                           ToString(outer));
  }
  if (options.enforce_preconditions && !report.precondition_failures.empty()) {
    throw PreconditionFailed(report.precondition_failures.front());
  }
  report.k = UnconditionalConstant(lambda_prime);

  // P' = B'_Lambda ∪ ±basis ∪ P.
  const std::size_t n = a.dim();
  std::vector<std::size_t> slot;
  for (const std::string& label : lambda.labels()) slot.push_back(a.IndexOf(label));
  std::vector<Vector> points;
  for (const Vector& v : lambda_prime_ball.vertices()) {
    Vector e(n, Rat(0));
    for (std::size_t k = 0; k < v.size(); ++k) e[slot[k]] = v[k];
    points.push_back(std::move(e));
  }
  for (std::size_t b = 0; b < n; ++b) points.push_back(UnitVector(n, b));
  report.sandwich_factor = SandwichFactor(p);
  Ball sandwich = SymmetrizeSigns(Sandwich(a.ball(), p));
  points.insert(points.end(), sandwich.vertices().begin(), sandwich.vertices().end());
  BasedSpace a_prime(a.labels(), Ball::FromPoints(points, n), a.name());

  // (i)
  report.section_equal = Subspace(a_prime, lambda.labels()).ball() == lambda_prime_ball;
  report.projection_inside = Contains(lambda_prime_ball, ProjectToLabels(a_prime, lambda.labels()).ball());
  // (ii)
  report.unit_basis = true;
  for (std::size_t b = 0; b < n; ++b) report.unit_basis = report.unit_basis && a_prime.Norm(UnitVector(n, b)) == 1;
  // (iii)
  report.ku_prime = UnconditionalConstant(a_prime);
  report.ku_within = report.ku_prime <= report.k;
  report.sign_images_within = true;
  for (const SignPattern& s : HalfSignPatterns(n)) {
    for (const Vector& v : a_prime.ball().vertices()) {
      if (GaugeLp(a_prime.ball(), ApplySigns(s, v)) > report.k) report.sign_images_within = false;
    }
  }
  // (iv)
  report.alpha = MaxGauge(a_prime.ball(), a.ball().vertices());
  report.beta = MaxGauge(a.ball(), a_prime.ball().vertices());
  report.lower_sandwich = StrictlyContains(a_prime.ball(), Scaled(a.ball(), 1 / (1 + p.delta_prime)));
  report.upper_sandwich = StrictlyContains(Scaled(a.ball(), 1 + p.delta), a_prime.ball());
  report.strict_eps = report.alpha < 1 + p.eps && report.beta < 1 + p.eps;
  return {a_prime, report};
}

}  // namespace ratbase
