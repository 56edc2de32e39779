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

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "ratbase/errors.hpp"
#include "ratbase/fraisse.hpp"
#include "ratbase/lp.hpp"

namespace ratbase {
namespace {

std::vector<Rat> GridValues(std::size_t max_den) {
  std::set<Rat> values;
  for (long q = 1; q <= static_cast<long>(max_den); ++q) {
    for (long p = -q; p <= q; ++p) {
      Rat r(p, q);
      r.canonicalize();
      values.insert(r);
    }
  }
  return {values.begin(), values.end()};
}

// Nonzero grid vectors whose first nonzero coordinate is positive.
std::vector<Vector> Representatives(std::size_t dim, const std::vector<Rat>& values) {
  std::vector<Vector> out;
  Vector v(dim);
  std::function<void(std::size_t, bool)> rec = [&](std::size_t k, bool positive) {
    if (k == dim) {
      if (positive) out.push_back(v);
      return;
    }
    for (const Rat& x : values) {
      if (!positive && x < 0) continue;
      v[k] = x;
      rec(k + 1, positive || x > 0);
    }
  };
  rec(0, false);
  return out;
}

bool InHull(const Vector& p, const std::vector<Vector>& others) {
  if (others.empty()) return false;
  lp::Problem problem(others.size());
  problem.SetAllNonnegative();
  for (std::size_t c = 0; c < p.size(); ++c) {
    Vector row(others.size());
    for (std::size_t k = 0; k < others.size(); ++k) row[k] = others[k][c];
    problem.AddConstraint(std::move(row), lp::Sense::kEqual, p[c]);
  }
  problem.AddConstraint(Vector(others.size(), Rat(1)), lp::Sense::kEqual, 1);
  return lp::Maximize(problem).status == lp::Status::kOptimal;
}

// Every point of reps ∪ -reps is extreme in their hull. By symmetry only
// the representatives need checking.
bool ConvexPosition(const std::vector<Vector>& reps) {
  for (std::size_t k = 0; k < reps.size(); ++k) {
    std::vector<Vector> others{Negate(reps[k])};
    for (std::size_t m = 0; m < reps.size(); ++m) {
      if (m == k) continue;
      others.push_back(reps[m]);
      others.push_back(Negate(reps[m]));
    }
    if (InHull(reps[k], others)) return false;
  }
  return true;
}

using CatalogKey = std::tuple<std::size_t, std::size_t, std::vector<Vector>>;

}  // namespace

std::vector<Vector> CanonicalForm(const Ball& ball) {
  const std::size_t d = ball.dim();
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<Vector>> best;
  do {
    std::vector<Vector> image;
    image.reserve(ball.vertices().size());
    for (const Vector& v : ball.vertices()) {
      Vector w(d);
      for (std::size_t k = 0; k < d; ++k) w[k] = v[perm[k]];
      image.push_back(std::move(w));
    }
    std::sort(image.begin(), image.end());
    if (!best || image < *best) best = std::move(image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

Catalog EnumerateSpaces(const CatalogBounds& bounds) {
  if (bounds.max_dim == 0 || bounds.max_denominator == 0 || bounds.max_vertices < 2) {
    throw Error("catalog bounds must be positive");
  }
  const std::vector<Rat> values = GridValues(bounds.max_denominator);
  std::set<CatalogKey> found;
  std::size_t visited = 0;
  for (std::size_t d = 1; d <= bounds.max_dim; ++d) {
    std::vector<Vector> reps = Representatives(d, values);
    if (bounds.shuffle_seed != 0) {
      std::mt19937_64 rng(bounds.shuffle_seed + d);
      std::shuffle(reps.begin(), reps.end(), rng);
    }
    std::vector<Vector> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (++visited > bounds.candidate_budget) {
        throw BudgetExceeded("catalog enumeration examined more than " + std::to_string(bounds.candidate_budget) +
                             " candidate vertex sets");
      }
      if (chosen.size() >= d && Rank(chosen) == d) {
        Ball ball = Ball::FromPoints(chosen, d);
        bool unit = true;
        for (std::size_t b = 0; b < d && unit; ++b) unit = Gauge(ball, UnitVector(d, b)) == 1;
        if (unit && UnconditionalConstant(BasedSpace(DefaultLabels(d), ball)) <= bounds.k_bound) {
          found.emplace(d, ball.vertices().size(), CanonicalForm(ball));
        }
      }
      if (2 * chosen.size() + 2 > bounds.max_vertices) return;
      for (std::size_t k = start; k < reps.size(); ++k) {
        chosen.push_back(reps[k]);
        if (ConvexPosition(chosen)) rec(k + 1);
        chosen.pop_back();
      }
    };
    rec(0);
  }
  Catalog catalog;
  catalog.bounds = bounds;
  for (const auto& [d, count, vertices] : found) {
    catalog.spaces.emplace_back(DefaultLabels(d), Ball::FromPoints(vertices, d),
                                "C" + std::to_string(catalog.spaces.size()));
  }
  return catalog;
}

std::optional<std::size_t> FindInCatalog(const Catalog& catalog, const BasedSpace& space) {
  std::vector<Vector> form = CanonicalForm(space.ball());
  for (std::size_t k = 0; k < catalog.spaces.size(); ++k) {
    const BasedSpace& c = catalog.spaces[k];
    if (c.dim() == space.dim() && c.ball().vertices() == form) return k;
  }
  return std::nullopt;
}

std::vector<BasedMorphism> EnumerateEmbeddings(const BasedSpace& z, const BasedSpace& x) {
  std::vector<BasedMorphism> out;
  if (z.dim() > x.dim()) return out;
  std::vector<std::size_t> targets;
  std::vector<bool> used(x.dim(), false);
  std::function<void()> rec = [&]() {
    if (targets.size() == z.dim()) {
      BasedMorphism f(z, x, targets);
      if (CertifyIsometry(f)) out.push_back(std::move(f));
      return;
    }
    for (std::size_t t = 0; t < x.dim(); ++t) {
      if (used[t]) continue;
      used[t] = true;
      targets.push_back(t);
      rec();
      targets.pop_back();
      used[t] = false;
    }
  };
  rec();
  return out;
}

}  // namespace ratbase
