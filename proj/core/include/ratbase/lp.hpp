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

// Exact two-phase simplex over the rationals.
//
// Pivoting follows Bland's rule (smallest eligible variable label enters,
// ties in the ratio test leave by smallest basic label), so the solver
// terminates on degenerate problems and is fully deterministic.

#ifndef RATBASE_LP_HPP_
#define RATBASE_LP_HPP_

#include <cstddef>
#include <vector>

#include "ratbase/rational.hpp"

namespace ratbase::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded };

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  Vector coefficients;
  Sense sense = Sense::kLessEqual;
  Rat rhs = 0;
};

/// maximize objective . x subject to the constraints. Variables are free
/// unless listed in `nonnegative`.
class Problem {
 public:
  explicit Problem(std::size_t num_variables);

  std::size_t num_variables() const { return num_variables_; }

  void SetObjective(Vector objective);
  void AddConstraint(Vector coefficients, Sense sense, Rat rhs);
  void SetNonnegative(std::size_t variable);
  void SetAllNonnegative();

  const Vector& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<bool>& nonnegative() const { return nonnegative_; }

 private:
  std::size_t num_variables_;
  Vector objective_;
  std::vector<Constraint> constraints_;
  std::vector<bool> nonnegative_;
};

struct Solution {
  Status status = Status::kInfeasible;
  Rat value = 0;
  Vector x;
};

Solution Maximize(const Problem& problem);

/// Standard form: maximize c.x subject to A x <= b, x >= 0.
Solution MaximizeStandard(const Matrix& a, const Vector& b, const Vector& c);

}  // namespace ratbase::lp

#endif  // RATBASE_LP_HPP_
