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

// Basis-preserving morphisms between based spaces and exact isometry
// certificates. The norm routines also accept an arbitrary injective matrix
// between two balls, which is how scalings and quotient maps are measured.

#ifndef RATBASE_MORPHISM_HPP_
#define RATBASE_MORPHISM_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ratbase/polytope.hpp"
#include "ratbase/space.hpp"

namespace ratbase {

class BasedMorphism {
 public:
  /// targets[k] is the codomain coordinate receiving domain basis vector k.
  /// Throws NotInjective if two basis vectors share a target.
  BasedMorphism(BasedSpace domain, BasedSpace codomain, std::vector<std::size_t> targets);

  /// Label-to-label form; every domain label must be mapped.
  static BasedMorphism FromLabels(BasedSpace domain, BasedSpace codomain,
                                  const std::map<std::string, std::string>& basis_map);

  const BasedSpace& domain() const { return domain_; }
  const BasedSpace& codomain() const { return codomain_; }
  const std::vector<std::size_t>& targets() const { return targets_; }

  /// Codomain label of the image of domain label `label`.
  const std::string& MapLabel(const std::string& label) const;

  /// (domain label, codomain label) pairs in domain order.
  std::vector<std::pair<std::string, std::string>> LabelPairs() const;

  Vector Apply(std::span<const Rat> x) const;
  Matrix AsMatrix() const;

 private:
  BasedSpace domain_;
  BasedSpace codomain_;
  std::vector<std::size_t> targets_;
};

BasedMorphism Identity(const BasedSpace& space);

/// Inclusion sending each label of `sub` to the equal label of `super`.
BasedMorphism Inclusion(const BasedSpace& sub, const BasedSpace& super);

/// g after f. Requires f's codomain labels to equal g's domain labels.
BasedMorphism Compose(const BasedMorphism& g, const BasedMorphism& f);

/// True iff the two morphisms send the same labels to the same labels.
bool SameLabelMap(const BasedMorphism& a, const BasedMorphism& b);

struct NormWitness {
  Rat value;
  /// A domain point of norm one attaining the value.
  Vector point;
};

struct IsometryMargin {
  Rat upper;
  Rat lower;
};

enum class MinGainMethod {
  kAuto,
  /// One LP per domain facet over the codomain facet functionals.
  kFacetPairs,
  /// One LP per domain facet over convex combinations of codomain vertices.
  kVertexHull,
};

NormWitness OperatorNormWitness(const Ball& domain, const Ball& codomain, const Matrix& map);
NormWitness MinGainWitness(const Ball& domain, const Ball& codomain, const Matrix& map,
                           MinGainMethod method = MinGainMethod::kAuto);

Rat OperatorNorm(const BasedMorphism& f);
NormWitness OperatorNormWitness(const BasedMorphism& f);

/// min{gauge_Y(f x) : gauge_X(x) = 1}. Throws NotInjective for maps with a
/// kernel (never the case for basis maps).
Rat MinGain(const BasedMorphism& f, MinGainMethod method = MinGainMethod::kAuto);
NormWitness MinGainWitness(const BasedMorphism& f, MinGainMethod method = MinGainMethod::kAuto);

IsometryMargin Margin(const BasedMorphism& f);

/// operator norm = min gain = 1.
bool CertifyIsometry(const BasedMorphism& f);

/// max(upper, 1/lower) - 1; f is an eps-isometry exactly when eps exceeds it.
Rat EpsMargin(const IsometryMargin& m);
Rat EpsMargin(const BasedMorphism& f);

}  // namespace ratbase

#endif  // RATBASE_MORPHISM_HPP_
