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

// Origin-symmetric, full-dimensional rational polytopes ("balls") and the
// exact algebra on them: hull reduction, vertex/facet conversion, Minkowski
// gauge, linear images, intersections and containment.
//
// A facet is stored as its normal f, meaning the inequality <f, x> <= 1.
// Because balls are symmetric, -f is a facet whenever f is.

#ifndef RATBASE_POLYTOPE_HPP_
#define RATBASE_POLYTOPE_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "ratbase/errors.hpp"
#include "ratbase/rational.hpp"

namespace ratbase {

using VertexBudgetExceeded = BudgetExceeded;

/// Upper bound on the number of vertices, facets or intermediate
/// double-description rays any single polytope computation may hold.
struct Budget {
  std::size_t max_vertices = 200000;
};

/// Process-wide default used when no budget is passed explicitly. The CLI
/// sets it from RATBASE_VERTEX_BUDGET.
Budget DefaultBudget();
void SetDefaultBudget(Budget budget);

class Ball {
 public:
  /// Extreme points of conv(points ∪ -points). Throws NotFullDimensional if
  /// the points do not span the space.
  static Ball FromPoints(std::span<const Vector> points, std::size_t dim, Budget budget = DefaultBudget());

  /// {x : |<f, x>| <= 1 for every given f}. The normals must span the space.
  static Ball FromFacets(std::span<const Vector> normals, std::size_t dim, Budget budget = DefaultBudget());

  /// Trusted constructor for vertex sets known to be symmetric and
  /// irredundant (used where a structural argument already proves it). Only
  /// sorts the vertices.
  static Ball FromExtremePoints(std::size_t dim, std::vector<Vector> vertices);

  std::size_t dim() const;

  /// Sorted lexicographically.
  const std::vector<Vector>& vertices() const;

  bool has_facets() const;

  /// Irredundant facet normals, sorted lexicographically. Computed on first
  /// use and cached; shared by all copies of this ball.
  const std::vector<Vector>& Facets(Budget budget = DefaultBudget()) const;

  friend bool operator==(const Ball& a, const Ball& b);
  friend Ball Scaled(const Ball& ball, const Rat& factor);
  friend Ball Reflected(const Ball& ball, std::span<const int> signs);

 private:
  struct Data;
  explicit Ball(std::shared_ptr<Data> data);
  std::shared_ptr<Data> data_;
};

Ball HullReduce(std::span<const Vector> points, std::size_t dim, Budget budget = DefaultBudget());

/// Returns a ball sharing the vertices with the facet cache populated.
Ball VrepToHrep(const Ball& ball, Budget budget = DefaultBudget());

/// Minkowski functional min{t >= 0 : x in t*ball}. Uses the facet cache when
/// present, otherwise an exact LP over the vertices.
Rat Gauge(const Ball& ball, std::span<const Rat> x);

/// max over facets of <f, x>; forces the facet computation.
Rat GaugeHrep(const Ball& ball, std::span<const Rat> x);

/// max{<y, x> : <y, v> <= 1 for every vertex v}, by exact simplex.
Rat GaugeLp(const Ball& ball, std::span<const Rat> x);

/// Linear image ball; `map` has one row per target coordinate.
Ball Project(const Ball& ball, const Matrix& map, Budget budget = DefaultBudget());

Ball Intersect(const Ball& a, const Ball& b, Budget budget = DefaultBudget());

/// True iff every vertex of inner has gauge <= 1 in outer.
bool Contains(const Ball& outer, const Ball& inner);

/// factor * ball for factor > 0. Carries the facet cache.
Ball Scaled(const Ball& ball, const Rat& factor);

/// Image under the diagonal map with the given +1/-1 entries. Carries the
/// facet cache.
Ball Reflected(const Ball& ball, std::span<const int> signs);

/// Vertices of {x : <a, x> <= 1 for all a}, by the double description
/// method. Throws NotFullDimensional when the region is unbounded.
std::vector<Vector> EnumerateVertices(std::span<const Vector> constraints, std::size_t dim,
                                      Budget budget = DefaultBudget());

/// Irredundant facet normals of conv(points ∪ -points).
std::vector<Vector> EnumerateFacets(std::span<const Vector> points, std::size_t dim,
                                    Budget budget = DefaultBudget());

}  // namespace ratbase

#endif  // RATBASE_POLYTOPE_HPP_
