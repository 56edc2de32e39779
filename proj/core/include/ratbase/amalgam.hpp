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

// Pushouts of based spaces along isometric embeddings. W is the quotient of
// the l1-sum of X and Y by {(i z, -j z)}, with the merged basis.

#ifndef RATBASE_AMALGAM_HPP_
#define RATBASE_AMALGAM_HPP_

#include <span>
#include <string>

#include "ratbase/morphism.hpp"
#include "ratbase/space.hpp"

namespace ratbase {

struct Pushout {
  BasedSpace w;
  BasedMorphism i_prime;  // X -> W
  BasedMorphism j_prime;  // Y -> W
};

enum class HullStrategy {
  /// Generic for small W, structural otherwise.
  kAuto,
  /// Convex hull of both vertex images by vertex/facet enumeration.
  kGeneric,
  /// Vertices read off directly: those of X and of Y outside the shared span,
  /// plus shared points that are vertices of both. Exact whenever i and j
  /// are isometries. Leaves the facet cache empty.
  kStructural,
};

struct AmalgamOptions {
  HullStrategy hull = HullStrategy::kAuto;
  /// Re-certify i and j before building W.
  bool verify_inputs = true;
  std::string name;
};

/// Throws NotIsometric when i or j fails certification, naming the witness.
Pushout Amalgamate(const BasedSpace& z, const BasedSpace& x, const BasedSpace& y, const BasedMorphism& i,
                   const BasedMorphism& j, const AmalgamOptions& options = {});

/// Quotient norm of a W-point, min{|x|_X + |y|_Y : w = i'x + j'y}, as one
/// LP over the facets of X and Y. Independent of the hull in `pushout`.
Rat AmalgamNormOracle(const Pushout& pushout, const BasedMorphism& i, const BasedMorphism& j,
                      std::span<const Rat> w_point);

/// Certifies that i' is isometric without facets of X or W. The section
/// of B_W over X is conv(i'B_X ∪ j'(B_Y ∩ span j(Z))), so it suffices that
/// the vertices of that Y-section have X-norm at most one and that i' does
/// not expand.
bool CertifyInclusionIsometry(const Pushout& pushout, const BasedMorphism& i, const BasedMorphism& j);

}  // namespace ratbase

#endif  // RATBASE_AMALGAM_HPP_
