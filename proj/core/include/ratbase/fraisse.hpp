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

// Bounded Fraisse machinery for rational K-based spaces: canonical catalogs,
// isometric embeddings, generic chains with a task ledger, extension tests,
// and the three-dimensional counterexample to almost-universality.

#ifndef RATBASE_FRAISSE_HPP_
#define RATBASE_FRAISSE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ratbase/amalgam.hpp"
#include "ratbase/morphism.hpp"
#include "ratbase/space.hpp"

namespace ratbase {

struct CatalogBounds {
  std::size_t max_dim = 2;
  /// Vertex coordinates are p/q with q <= max_denominator and |p/q| <= 1.
  std::size_t max_denominator = 1;
  std::size_t max_vertices = 12;
  Rat k_bound = 1;
  /// Cap on candidate vertex sets examined; BudgetExceeded beyond it.
  std::size_t candidate_budget = 2000000;
  /// Nonzero: visit candidates in a shuffled order. The result must not
  /// depend on it.
  std::uint64_t shuffle_seed = 0;
};

struct Catalog {
  CatalogBounds bounds;
  /// Labels e1..en, ordered by dimension, vertex count, then canonical
  /// vertex list.
  std::vector<BasedSpace> spaces;
};

/// Lexicographically least sorted vertex list over all label permutations.
std::vector<Vector> CanonicalForm(const Ball& ball);

Catalog EnumerateSpaces(const CatalogBounds& bounds);

/// Index of the catalog space isomorphic to `space` under relabeling.
std::optional<std::size_t> FindInCatalog(const Catalog& catalog, const BasedSpace& space);

/// All injective label maps z -> x whose morphism is an isometry, in
/// lexicographic order of the target tuples.
std::vector<BasedMorphism> EnumerateEmbeddings(const BasedSpace& z, const BasedSpace& x);

struct ChainTask {
  std::size_t stage = 0;
  std::size_t catalog_index = 0;
  BasedMorphism f;  // U_stage -> Y
  std::optional<std::size_t> answered_at;
  std::optional<BasedMorphism> witness;  // Y -> U_answered_at
  bool verified = false;
};

/// How stage k+1 arose: the pushout of i: Z -> U_k and j: Z -> Y, with
/// j_prime: Y -> U_{k+1}.
struct StageOrigin {
  BasedMorphism i;
  BasedMorphism j;
  BasedMorphism j_prime;
};

struct Chain {
  Rat k_bound;
  std::vector<BasedSpace> stages;
  /// inclusions[k]: U_k -> U_{k+1}.
  std::vector<BasedMorphism> inclusions;
  std::vector<bool> inclusion_verified;
  std::vector<StageOrigin> origins;
  /// Exact K_u per stage where it was computed.
  std::vector<std::optional<Rat>> ku;
  std::vector<ChainTask> ledger;
  std::size_t steps_taken = 0;
  /// Empty unless a budget stopped construction early.
  std::string halted;

  std::size_t answered() const;
  std::size_t pending() const;
};

struct ChainOptions {
  std::size_t max_stage_dim = 64;
  std::size_t max_stage_vertices = 4096;
  /// K_u of a stage is computed exactly up to this dimension.
  std::size_t exact_ku_max_dim = 6;
};

/// Each step answers the oldest pending task (n, f: U_n -> Y) by amalgamating
/// U_n -> U_m (m the last stage) with f. New labels append U_{m+1} = W.
/// Only stages no larger than the catalog's largest space receive tasks.
Chain BuildGenericChain(const Catalog& catalog, std::size_t steps, const BasedSpace& seed,
                        const ChainOptions& options = {});

struct ChainVerification {
  bool inclusions_isometric = true;
  bool witnesses_valid = true;
  bool stages_within_k = true;
  std::size_t answered = 0;
  std::vector<std::string> failures;
  bool ok() const { return inclusions_isometric && witnesses_valid && stages_within_k; }
};

/// Re-checks every inclusion, every answered witness (isometric, and g∘f is
/// the inclusion of U_n) and every exact K_u against the bound.
ChainVerification VerifyChain(const Chain& chain);

/// Extends f: (Lambda-subspace of a) -> U_n to an isometry a -> U_m,
/// appending a stage when needed. Throws NotIsometric if f is not an
/// isometry and PreconditionFailed if K_u(a) exceeds the chain's bound.
BasedMorphism TestUniversality(Chain& chain, const BasedSpace& a, std::span<const std::string> lambda_labels,
                               const BasedMorphism& f, const ChainOptions& options = {});

struct CounterexampleParams {
  Rat eta;
  Rat eps;
  Rat delta;
};

/// 0 < eta < eps < delta and eps <= 1.
void CheckExampleParams(const CounterexampleParams& p);
/// Also delta <= 1, (1+eta)(1+eps) <= 1+delta and
/// (1+eps)/(1+eta) > 1 + delta/(1+delta).
void CheckNonUniversalityParams(const CounterexampleParams& p);

struct Counterexample {
  CounterexampleParams params;
  BasedSpace a;
  /// max{|x1|, |x2|, (1+eps)/2 (|x1| + |x2|)} on {e1, e2}.
  Ball lambda_prime_ball;
  Vector a_point;

  Rat gauge_a_point;
  std::vector<Rat> gauge_basis;
  Rat ku;
  Rat ku_bound;  // 1 + 2 delta
  bool section_is_square = false;
  bool lambda_prime_one_based = false;
  /// |x|_A <= |x|'_Lambda <= (1+eps)|x|_A on Lambda.
  bool lambda_prime_sandwich = false;

  bool Passed() const;
};

Counterexample BuildCounterexample(const CounterexampleParams& p);

/// (1+delta)((1+eps)/(1+eta) - delta/(1+delta)).
Rat NonUniversalityBound(const CounterexampleParams& p);

struct NonUniversalityReport {
  Rat bound;
  Rat one_plus_delta;
  bool bound_exceeds = false;
  Rat gauge_e3;
  Rat gauge_e1_plus_e2;
  Rat gauge_a_point;
  /// gauge(e3) = 1 and gauge(e1 + e2) > (1+eps)/(1+eta).
  bool hypotheses_met = false;
  /// Only meaningful when the hypotheses hold.
  bool bound_respected = false;
};

NonUniversalityReport VerifyNonUniversalityBound(const CounterexampleParams& p, const Ball& candidate);

}  // namespace ratbase

#endif  // RATBASE_FRAISSE_HPP_
