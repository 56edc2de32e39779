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

// Based spaces: a finite ordered basis of string labels together with a
// polyhedral unit ball written in that basis.

#ifndef RATBASE_SPACE_HPP_
#define RATBASE_SPACE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ratbase/polytope.hpp"
#include "ratbase/rational.hpp"

namespace ratbase {

class BasedSpace {
 public:
  /// Labels must be distinct and match the ball dimension. Unit norm of the
  /// basis vectors is not enforced here; see Validate.
  BasedSpace(std::vector<std::string> labels, Ball ball, std::string name = "");

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Ball& ball() const { return ball_; }
  const std::string& name() const { return name_; }

  /// Coordinate index of a label, or nullopt.
  std::optional<std::size_t> Find(const std::string& label) const;
  /// Like Find but throws Error for unknown labels.
  std::size_t IndexOf(const std::string& label) const;

  Rat Norm(std::span<const Rat> x) const { return Gauge(ball_, x); }

  BasedSpace WithName(std::string name) const;

 private:
  std::vector<std::string> labels_;
  Ball ball_;
  std::string name_;
};

/// Same labels in both spaces (in order) and the same vertex set.
bool operator==(const BasedSpace& a, const BasedSpace& b);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
};

/// Re-checks symmetry, full dimension and irredundancy of the ball from its
/// vertex list (independently of how it was built) and unit basis norms.
ValidationReport Validate(const BasedSpace& space);

/// Same checks for a raw, unreduced vertex list as read from a file.
ValidationReport ValidateVertexList(std::span<const std::string> labels, std::span<const Vector> vertices);

/// Entries in {-1, +1} for sign changes T_s or {0, 1} for suppressions,
/// one per basis label in coordinate order.
using SignPattern = std::vector<int>;

/// Diagonal matrix diag(s).
Matrix SignOperator(const BasedSpace& space, const SignPattern& s);

/// T_s x.
Vector ApplySigns(const SignPattern& s, std::span<const Rat> x);

struct ConstantWitness {
  Rat value;
  SignPattern pattern;
  Vector vertex;
};

/// K_u: max of gauge(T_s v) over vertices v and the 2^(n-1) sign patterns
/// with s_0 = +1.
ConstantWitness UnconditionalConstantWitness(const BasedSpace& space);
Rat UnconditionalConstant(const BasedSpace& space);

/// K_s: max of gauge(T_s v) over vertices v and all s in {0,1}^n.
ConstantWitness SuppressionConstantWitness(const BasedSpace& space);
Rat SuppressionConstant(const BasedSpace& space);

/// Renorming by gauge_1(x) = max_s gauge(T_s x) over sign patterns; the
/// ball is the intersection of all sign reflections.
BasedSpace OneBasing(const BasedSpace& space, Budget budget = DefaultBudget());

/// The based subspace spanned by `sub`, with the induced (section) ball.
/// Labels keep the order of `space`.
BasedSpace Subspace(const BasedSpace& space, std::span<const std::string> sub, Budget budget = DefaultBudget());

/// Coordinate projection onto the span of `sub`.
BasedSpace ProjectToLabels(const BasedSpace& space, std::span<const std::string> sub, Budget budget = DefaultBudget());

/// Reorders coordinates: label k of the result is labels[order[k]].
BasedSpace Permuted(const BasedSpace& space, std::span<const std::size_t> order);

/// Renames labels without moving coordinates.
BasedSpace Relabeled(const BasedSpace& space, std::vector<std::string> labels);

/// Space with labels e1..en.
std::vector<std::string> DefaultLabels(std::size_t dim);

}  // namespace ratbase

#endif  // RATBASE_SPACE_HPP_
