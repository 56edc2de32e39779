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

// Rational renormings that turn an eps-isometry on a based subspace into an
// exact isometry, with certificates for every claimed property.

#ifndef RATBASE_RATIONALIZE_HPP_
#define RATBASE_RATIONALIZE_HPP_

#include <span>
#include <string>
#include <vector>

#include "ratbase/polytope.hpp"
#include "ratbase/space.hpp"

namespace ratbase {

struct SandwichParams {
  Rat delta;
  Rat delta_prime;
  Rat eps;
};

/// Throws PreconditionFailed unless 0 < delta < delta_prime < eps.
void CheckSandwichParams(const SandwichParams& p);

/// Simplest rational strictly between 1/(1+delta') and 1/(1+delta).
Rat SandwichFactor(const SandwichParams& p);

/// factor * ball, so (1/(1+delta'))B ⊂ P ⊂ (1/(1+delta))B strictly.
Ball Sandwich(const Ball& ball, const SandwichParams& p);

/// conv of all 2^n sign reflections of the points (and their negatives).
Ball SymmetrizeSigns(std::span<const Vector> points, std::size_t dim, Budget budget = DefaultBudget());
Ball SymmetrizeSigns(const Ball& ball, Budget budget = DefaultBudget());

struct RationalizeReport {
  std::vector<std::string> precondition_failures;
  /// K_u of (Lambda, B'_Lambda); the sign bound carried to A'.
  Rat k;
  Rat sandwich_factor;

  // (i) B'_A ∩ Lambda = B'_Lambda, by direct section and by projection.
  bool section_equal = false;
  bool projection_inside = false;
  // (ii)
  bool unit_basis = false;
  // (iii) K_u(A') <= K, by the constant and by sign images of vertices.
  Rat ku_prime;
  bool ku_within = false;
  bool sign_images_within = false;
  // (iv) |x|'_A <= alpha |x|_A and |x|_A <= beta |x|'_A, both sharp.
  Rat alpha;
  Rat beta;
  bool lower_sandwich = false;  // (1/(1+delta'))B_A ⊂ B'_A
  bool upper_sandwich = false;  // B'_A ⊂ (1+delta)B_A
  bool strict_eps = false;      // alpha < 1+eps and beta < 1+eps

  bool certificate_i() const { return section_equal && projection_inside; }
  bool certificate_ii() const { return unit_basis; }
  bool certificate_iii() const { return ku_within && sign_images_within; }
  bool certificate_iv() const { return lower_sandwich && upper_sandwich && strict_eps; }
  bool Passed() const {
    return precondition_failures.empty() && certificate_i() && certificate_ii() && certificate_iii() &&
           certificate_iv();
  }
};

struct RationalizeOptions {
  /// When false, precondition failures are recorded in the report and the
  /// construction and certificates still run.
  bool enforce_preconditions = true;
};

struct RationalizeResult {
  BasedSpace a_prime;
  RationalizeReport report;
};

/// B'_A = conv(B'_Lambda ∪ ±basis ∪ P) with P the sign-symmetrized sandwich
/// of B_A. Requires K_u(A) = 1 and
/// (1/(1+delta))B_Lambda ⊆ B'_Lambda ⊆ (1+delta)B_Lambda.
RationalizeResult RationalizeExtension(const BasedSpace& a, std::span<const std::string> lambda_labels,
                                       const Ball& lambda_prime_ball, const SandwichParams& p,
                                       const RationalizeOptions& options = {});

}  // namespace ratbase

#endif  // RATBASE_RATIONALIZE_HPP_
