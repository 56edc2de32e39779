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

#include "ratbase/amalgam.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "ratbase/errors.hpp"
#include "ratbase/lp.hpp"

namespace ratbase {
namespace {

constexpr std::size_t kGenericHullMaxDim = 6;

void RequireIsometric(const BasedMorphism& f, const char* name) {
  NormWitness up = OperatorNormWitness(f);
  if (up.value != 1) {
    throw NotIsometric(std::string(name) + " has operator norm " + ToString(up.value) + " at vertex " +
                       ToString(up.point));
  }
  NormWitness low = MinGainWitness(f);
  if (low.value != 1) {
    throw NotIsometric(std::string(name) + " has minimal gain " + ToString(low.value) + " at " +
                       ToString(low.point));
  }
}

void RequireShape(const BasedMorphism& f, const BasedSpace& from, const BasedSpace& to, const char* name) {
  if (f.domain().labels() != from.labels() || f.codomain().labels() != to.labels()) {
    throw Error(std::string(name) + " does not connect the given spaces");
  }
}

// Zero outside the coordinates listed in `support`?
bool Supported(const Vector& v, const std::vector<bool>& support) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!support[k] && v[k] != 0) return false;
  }
  return true;
}

std::vector<bool> Mask(std::size_t dim, const std::vector<std::size_t>& on) {
  std::vector<bool> out(dim, false);
  for (std::size_t k : on) out[k] = true;
  return out;
}

Vector Embed(const Vector& v, const std::vector<std::size_t>& targets, std::size_t dim) {
  Vector out(dim, Rat(0));
  for (std::size_t k = 0; k < v.size(); ++k) out[targets[k]] = v[k];
  return out;
}

}  // namespace

Pushout Amalgamate(const BasedSpace& z, const BasedSpace& x, const BasedSpace& y, const BasedMorphism& i,
                   const BasedMorphism& j, const AmalgamOptions& options) {
  RequireShape(i, z, x, "i");
  RequireShape(j, z, y, "j");
  if (options.verify_inputs) {
    RequireIsometric(i, "i");
    RequireIsometric(j, "j");
  }

  // W coordinates: those of X, then the Y coordinates outside j(Z).
  std::vector<std::string> labels = x.labels();
  std::set<std::string> taken(labels.begin(), labels.end());
  std::vector<std::size_t> y_targets(y.dim(), SIZE_MAX);
  for (std::size_t c = 0; c < z.dim(); ++c) y_targets[j.targets()[c]] = i.targets()[c];
  for (std::size_t k = 0; k < y.dim(); ++k) {
    if (y_targets[k] != SIZE_MAX) continue;
    std::string name = y.labels()[k];
    for (int suffix = 1; taken.count(name); ++suffix) name = y.labels()[k] + "_" + std::to_string(suffix);
    taken.insert(name);
    y_targets[k] = labels.size();
    labels.push_back(name);
  }
  const std::size_t dim = labels.size();
  std::vector<std::size_t> x_targets(x.dim());
  for (std::size_t k = 0; k < x.dim(); ++k) x_targets[k] = k;

  HullStrategy hull = options.hull;
  if (hull == HullStrategy::kAuto) hull = dim <= kGenericHullMaxDim ? HullStrategy::kGeneric : HullStrategy::kStructural;

  std::vector<Vector> points;
  if (hull == HullStrategy::kGeneric) {
    for (const Vector& v : x.ball().vertices()) points.push_back(Embed(v, x_targets, dim));
    for (const Vector& v : y.ball().vertices()) points.push_back(Embed(v, y_targets, dim));
  } else {
    std::vector<bool> in_x = Mask(x.dim(), i.targets()), in_y = Mask(y.dim(), j.targets());
    const auto& vy = y.ball().vertices();
    for (const Vector& v : x.ball().vertices()) {
      if (Supported(v, in_x)) {
        Vector image(y.dim(), Rat(0));
        for (std::size_t c = 0; c < z.dim(); ++c) image[j.targets()[c]] = v[i.targets()[c]];
        if (!std::binary_search(vy.begin(), vy.end(), image)) continue;
      }
      points.push_back(Embed(v, x_targets, dim));
    }
    for (const Vector& v : vy) {
      if (!Supported(v, in_y)) points.push_back(Embed(v, y_targets, dim));
    }
  }
  Ball ball = hull == HullStrategy::kGeneric ? Ball::FromPoints(points, dim)
                                             : Ball::FromExtremePoints(dim, std::move(points));
  BasedSpace w(std::move(labels), std::move(ball), options.name);
  return Pushout{w, BasedMorphism(x, w, std::move(x_targets)), BasedMorphism(y, w, std::move(y_targets))};
}

Rat AmalgamNormOracle(const Pushout& pushout, const BasedMorphism& i, const BasedMorphism& j,
                      std::span<const Rat> w_point) {
  const BasedSpace& x = pushout.i_prime.domain();
  const BasedSpace& y = pushout.j_prime.domain();
  const std::size_t dz = i.domain().dim();
  std::vector<bool> shared = Mask(y.dim(), j.targets());

  // w = i'(x0 - i u) + j'(y0 + j u) for every u.
  Vector x0(x.dim()), y0(y.dim(), Rat(0));
  for (std::size_t k = 0; k < x.dim(); ++k) x0[k] = w_point[pushout.i_prime.targets()[k]];
  for (std::size_t k = 0; k < y.dim(); ++k) {
    if (!shared[k]) y0[k] = w_point[pushout.j_prime.targets()[k]];
  }

  const std::size_t tx = dz, ty = dz + 1;
  lp::Problem problem(dz + 2);
  problem.SetNonnegative(tx);
  problem.SetNonnegative(ty);
  Vector objective(dz + 2, Rat(0));
  objective[tx] = objective[ty] = -1;
  problem.SetObjective(objective);
  for (const Vector& f : x.ball().Facets()) {
    Vector row(dz + 2, Rat(0));
    for (std::size_t c = 0; c < dz; ++c) row[c] = -f[i.targets()[c]];
    row[tx] = -1;
    problem.AddConstraint(std::move(row), lp::Sense::kLessEqual, -Dot(f, x0));
  }
  for (const Vector& h : y.ball().Facets()) {
    Vector row(dz + 2, Rat(0));
    for (std::size_t c = 0; c < dz; ++c) row[c] = h[j.targets()[c]];
    row[ty] = -1;
    problem.AddConstraint(std::move(row), lp::Sense::kLessEqual, -Dot(h, y0));
  }
  lp::Solution sol = lp::Maximize(problem);
  if (sol.status != lp::Status::kOptimal) throw Error("amalgam norm LP failed");
  return -sol.value;
}

bool CertifyInclusionIsometry(const Pushout& pushout, const BasedMorphism& i, const BasedMorphism& j) {
  if (OperatorNorm(pushout.i_prime) != 1) return false;
  const BasedSpace& x = pushout.i_prime.domain();
  const BasedSpace& y = pushout.j_prime.domain();
  std::vector<std::string> shared;
  for (std::size_t t : j.targets()) shared.push_back(y.labels()[t]);
  BasedSpace section = Subspace(y, shared);
  // Section coordinate -> X coordinate through i j^{-1}.
  std::vector<std::size_t> to_x;
  for (const std::string& label : section.labels()) {
    std::size_t yk = y.IndexOf(label);
    std::size_t c = static_cast<std::size_t>(std::find(j.targets().begin(), j.targets().end(), yk) - j.targets().begin());
    to_x.push_back(i.targets()[c]);
  }
  for (const Vector& s : section.ball().vertices()) {
    if (Gauge(x.ball(), Embed(s, to_x, x.dim())) > 1) return false;
  }
  return true;
}

}  // namespace ratbase
