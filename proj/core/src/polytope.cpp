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

#include "ratbase/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include <boost/dynamic_bitset.hpp>

#include "ratbase/lp.hpp"

namespace ratbase {
namespace {

std::mutex g_budget_mu;
Budget g_budget;

void SortUnique(std::vector<Vector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// points ∪ -points without the origin, sorted and deduplicated.
std::vector<Vector> SymmetricClosure(std::span<const Vector> points, std::size_t dim) {
  std::vector<Vector> out;
  out.reserve(2 * points.size());
  for (const Vector& p : points) {
    if (p.size() != dim) throw Error("point of dimension " + std::to_string(p.size()) + " in a " +
                                     std::to_string(dim) + "-dimensional space");
    if (IsZero(p)) continue;
    out.push_back(p);
    out.push_back(Negate(p));
  }
  SortUnique(out);
  return out;
}

void CheckBudget(std::size_t count, const Budget& budget, const char* what) {
  if (count > budget.max_vertices) {
    throw BudgetExceeded(std::string(what) + " count " + std::to_string(count) + " exceeds budget " +
                         std::to_string(budget.max_vertices));
  }
}

// Elements of `candidates` whose tight set in `duals` has full rank.
std::vector<Vector> FullRankTight(const std::vector<Vector>& candidates, const std::vector<Vector>& duals,
                                  std::size_t dim) {
  std::vector<Vector> out;
  for (const Vector& c : candidates) {
    std::vector<Vector> tight;
    for (const Vector& d : duals) {
      if (Dot(c, d) == 1) tight.push_back(d);
    }
    if (tight.size() >= dim && Rank(tight) == dim) out.push_back(c);
  }
  return out;
}

struct Ray {
  Vector v;
  boost::dynamic_bitset<> zeros;
};

}  // namespace

Budget DefaultBudget() {
  std::lock_guard<std::mutex> lock(g_budget_mu);
  return g_budget;
}

void SetDefaultBudget(Budget budget) {
  std::lock_guard<std::mutex> lock(g_budget_mu);
  g_budget = budget;
}

struct Ball::Data {
  std::size_t dim = 0;
  std::vector<Vector> vertices;
  mutable std::mutex mu;
  mutable std::optional<std::vector<Vector>> facets;
};

Ball::Ball(std::shared_ptr<Data> data) : data_(std::move(data)) {}

Ball Ball::FromPoints(std::span<const Vector> points, std::size_t dim, Budget budget) {
  if (dim == 0) throw NotFullDimensional("balls live in spaces of positive dimension");
  std::vector<Vector> s = SymmetricClosure(points, dim);
  if (Rank(s) < dim) throw NotFullDimensional("points do not span the " + std::to_string(dim) + "-dimensional space");
  std::vector<Vector> facets = EnumerateVertices(s, dim, budget);
  auto data = std::make_shared<Ball::Data>();
  data->dim = dim;
  data->vertices = FullRankTight(s, facets, dim);
  CheckBudget(data->vertices.size(), budget, "vertex");
  data->facets = std::move(facets);
  return Ball(std::move(data));
}

Ball Ball::FromFacets(std::span<const Vector> normals, std::size_t dim, Budget budget) {
  if (dim == 0) throw NotFullDimensional("balls live in spaces of positive dimension");
  std::vector<Vector> n = SymmetricClosure(normals, dim);
  if (Rank(n) < dim) throw NotFullDimensional("facet normals do not span the dual space; the region is unbounded");
  std::vector<Vector> vertices = EnumerateVertices(n, dim, budget);
  auto data = std::make_shared<Ball::Data>();
  data->dim = dim;
  data->facets = FullRankTight(n, vertices, dim);
  data->vertices = std::move(vertices);
  return Ball(std::move(data));
}

Ball Ball::FromExtremePoints(std::size_t dim, std::vector<Vector> vertices) {
  auto data = std::make_shared<Ball::Data>();
  data->dim = dim;
  SortUnique(vertices);
  data->vertices = std::move(vertices);
  return Ball(std::move(data));
}

std::size_t Ball::dim() const { return data_->dim; }

const std::vector<Vector>& Ball::vertices() const { return data_->vertices; }

bool Ball::has_facets() const {
  std::lock_guard<std::mutex> lock(data_->mu);
  return data_->facets.has_value();
}

const std::vector<Vector>& Ball::Facets(Budget budget) const {
  std::lock_guard<std::mutex> lock(data_->mu);
  if (!data_->facets) data_->facets = EnumerateVertices(data_->vertices, data_->dim, budget);
  return *data_->facets;
}

bool operator==(const Ball& a, const Ball& b) {
  return a.data_ == b.data_ || (a.dim() == b.dim() && a.vertices() == b.vertices());
}

Ball HullReduce(std::span<const Vector> points, std::size_t dim, Budget budget) {
  return Ball::FromPoints(points, dim, budget);
}

Ball VrepToHrep(const Ball& ball, Budget budget) {
  ball.Facets(budget);
  return ball;
}

Rat Gauge(const Ball& ball, std::span<const Rat> x) {
  if (ball.has_facets()) return GaugeHrep(ball, x);
  return GaugeLp(ball, x);
}

Rat GaugeHrep(const Ball& ball, std::span<const Rat> x) {
  assert(x.size() == ball.dim());
  Rat best = 0;
  for (const Vector& f : ball.Facets()) {
    Rat value = Dot(f, x);
    if (value > best) best = value;
  }
  return best;
}

Rat GaugeLp(const Ball& ball, std::span<const Rat> x) {
  assert(x.size() == ball.dim());
  if (IsZero(x)) return 0;
  const std::size_t d = ball.dim();
  Matrix a;
  a.reserve(ball.vertices().size());
  for (const Vector& v : ball.vertices()) {
    Vector row(2 * d);
    for (std::size_t k = 0; k < d; ++k) {
      row[k] = v[k];
      row[d + k] = -v[k];
    }
    a.push_back(std::move(row));
  }
  Vector b(a.size(), Rat(1));
  Vector c(2 * d);
  for (std::size_t k = 0; k < d; ++k) {
    c[k] = x[k];
    c[d + k] = -x[k];
  }
  lp::Solution sol = lp::MaximizeStandard(a, b, c);
  if (sol.status != lp::Status::kOptimal) throw NotFullDimensional("gauge LP unbounded: ball is not full-dimensional");
  return sol.value;
}

Ball Project(const Ball& ball, const Matrix& map, Budget budget) {
  std::vector<Vector> images;
  images.reserve(ball.vertices().size());
  for (const Vector& v : ball.vertices()) images.push_back(Apply(map, v));
  return Ball::FromPoints(images, map.size(), budget);
}

Ball Intersect(const Ball& a, const Ball& b, Budget budget) {
  if (a.dim() != b.dim()) throw Error("intersecting balls of different dimension");
  std::vector<Vector> normals = a.Facets(budget);
  const std::vector<Vector>& more = b.Facets(budget);
  normals.insert(normals.end(), more.begin(), more.end());
  return Ball::FromFacets(normals, a.dim(), budget);
}

bool Contains(const Ball& outer, const Ball& inner) {
  if (outer.dim() != inner.dim()) throw Error("containment between balls of different dimension");
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const Vector& v) { return Gauge(outer, v) <= 1; });
}

Ball Scaled(const Ball& ball, const Rat& factor) {
  assert(factor > 0);
  auto data = std::make_shared<Ball::Data>();
  data->dim = ball.dim();
  for (const Vector& v : ball.vertices()) data->vertices.push_back(Scale(v, factor));
  if (ball.has_facets()) {
    data->facets.emplace();
    Rat inv = 1 / factor;
    for (const Vector& f : ball.Facets()) data->facets->push_back(Scale(f, inv));
  }
  return Ball(std::move(data));
}

Ball Reflected(const Ball& ball, std::span<const int> signs) {
  assert(signs.size() == ball.dim());
  auto flip = [&](const Vector& v) {
    Vector out(v);
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (signs[k] < 0) out[k] = -out[k];
    }
    return out;
  };
  auto data = std::make_shared<Ball::Data>();
  data->dim = ball.dim();
  for (const Vector& v : ball.vertices()) data->vertices.push_back(flip(v));
  SortUnique(data->vertices);
  if (ball.has_facets()) {
    data->facets.emplace();
    for (const Vector& f : ball.Facets()) data->facets->push_back(flip(f));
    SortUnique(*data->facets);
  }
  return Ball(std::move(data));
}

std::vector<Vector> EnumerateFacets(std::span<const Vector> points, std::size_t dim, Budget budget) {
  std::vector<Vector> s = SymmetricClosure(points, dim);
  if (Rank(s) < dim) throw NotFullDimensional("points do not span the " + std::to_string(dim) + "-dimensional space");
  return EnumerateVertices(s, dim, budget);
}

std::vector<Vector> EnumerateVertices(std::span<const Vector> constraints, std::size_t dim, Budget budget) {
  // Homogenize: the cone {(x, t) : t >= 0, <a, x> <= t} in dimension dim+1.
  // Its extreme rays with t > 0 are the vertices (x/t).
  const std::size_t cone_dim = dim + 1;
  std::vector<Vector> rows;
  rows.reserve(constraints.size() + 1);
  rows.push_back(UnitVector(cone_dim, dim));
  for (const Vector& a : constraints) {
    assert(a.size() == dim);
    Vector h(cone_dim);
    for (std::size_t k = 0; k < dim; ++k) h[k] = -a[k];
    h[dim] = 1;
    rows.push_back(std::move(h));
  }
  const std::size_t num_rows = rows.size();

  // Greedy choice of cone_dim independent rows, kept in echelon form.
  std::vector<std::size_t> basis;
  {
    Matrix echelon;
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < num_rows && basis.size() < cone_dim; ++r) {
      Vector v = rows[r];
      for (std::size_t e = 0; e < echelon.size(); ++e) {
        if (v[pivots[e]] == 0) continue;
        Rat factor = v[pivots[e]] / echelon[e][pivots[e]];
        for (std::size_t k = 0; k < cone_dim; ++k) v[k] -= factor * echelon[e][k];
      }
      auto nz = std::find_if(v.begin(), v.end(), [](const Rat& x) { return x != 0; });
      if (nz == v.end()) continue;
      pivots.push_back(static_cast<std::size_t>(nz - v.begin()));
      echelon.push_back(std::move(v));
      basis.push_back(r);
    }
  }
  if (basis.size() < cone_dim) throw NotFullDimensional("constraints do not bound a full-dimensional region");

  // Initial rays: columns of the inverse of the basis submatrix.
  Matrix aug(cone_dim, Vector(2 * cone_dim, Rat(0)));
  for (std::size_t i = 0; i < cone_dim; ++i) {
    for (std::size_t k = 0; k < cone_dim; ++k) aug[i][k] = rows[basis[i]][k];
    aug[i][cone_dim + i] = 1;
  }
  for (std::size_t c = 0; c < cone_dim; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;
    std::swap(aug[p], aug[c]);
    Rat inv = 1 / aug[c][c];
    for (Rat& x : aug[c]) x *= inv;
    for (std::size_t r = 0; r < cone_dim; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      Rat factor = aug[r][c];
      for (std::size_t k = 0; k < 2 * cone_dim; ++k) aug[r][k] -= factor * aug[c][k];
    }
  }
  std::vector<Ray> rays;
  std::vector<bool> processed(num_rows, false);
  for (std::size_t j = 0; j < cone_dim; ++j) {
    Ray ray;
    ray.v.resize(cone_dim);
    for (std::size_t k = 0; k < cone_dim; ++k) ray.v[k] = aug[k][cone_dim + j];
    ray.v = PrimitiveDirection(ray.v);
    ray.zeros.resize(num_rows);
    for (std::size_t i = 0; i < cone_dim; ++i) {
      if (i != j) ray.zeros.set(basis[i]);
    }
    rays.push_back(std::move(ray));
  }
  for (std::size_t r : basis) processed[r] = true;

  for (std::size_t r = 0; r < num_rows; ++r) {
    if (processed[r]) continue;
    processed[r] = true;
    const Vector& h = rows[r];
    std::vector<Rat> slack(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      slack[k] = Dot(h, rays[k].v);
      if (slack[k] > 0) {
        pos.push_back(k);
      } else if (slack[k] < 0) {
        neg.push_back(k);
      } else {
        zero.push_back(k);
      }
    }
    if (neg.empty()) {
      for (std::size_t k : zero) rays[k].zeros.set(r);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        boost::dynamic_bitset<> common = rays[p].zeros & rays[n].zeros;
        if (cone_dim >= 2 && common.count() + 2 < cone_dim) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k != p && k != n && common.is_subset_of(rays[k].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray ray;
        ray.v = PrimitiveDirection(Sub(Scale(rays[n].v, slack[p]), Scale(rays[p].v, slack[n])));
        ray.zeros = std::move(common);
        ray.zeros.set(r);
        next.push_back(std::move(ray));
      }
    }
    for (std::size_t k : pos) next.push_back(std::move(rays[k]));
    for (std::size_t k : zero) {
      rays[k].zeros.set(r);
      next.push_back(std::move(rays[k]));
    }
    rays = std::move(next);
    CheckBudget(rays.size(), budget, "double-description ray");
  }

  std::vector<Vector> vertices;
  vertices.reserve(rays.size());
  for (const Ray& ray : rays) {
    const Rat& t = ray.v[dim];
    if (t == 0) throw NotFullDimensional("constraints leave the region unbounded");
    Vector x(dim);
    for (std::size_t k = 0; k < dim; ++k) x[k] = ray.v[k] / t;
    vertices.push_back(std::move(x));
  }
  SortUnique(vertices);
  return vertices;
}

}  // namespace ratbase
