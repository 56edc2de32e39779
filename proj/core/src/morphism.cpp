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

#include "ratbase/morphism.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "ratbase/errors.hpp"
#include "ratbase/lp.hpp"

namespace ratbase {
namespace {

// Facets with a positive leading entry; the rest are their negatives.
std::vector<const Vector*> HalfFacets(const Ball& ball) {
  std::vector<const Vector*> out;
  for (const Vector& f : ball.Facets()) {
    for (const Rat& x : f) {
      if (x == 0) continue;
      if (x > 0) out.push_back(&f);
      break;
    }
  }
  return out;
}

Vector Transposed(const Matrix& map, std::span<const Rat> h, std::size_t cols) {
  Vector out(cols, Rat(0));
  for (std::size_t r = 0; r < map.size(); ++r) {
    if (h[r] == 0) continue;
    for (std::size_t c = 0; c < cols; ++c) out[c] += h[r] * map[r][c];
  }
  return out;
}

void CheckShapes(const Ball& domain, const Ball& codomain, const Matrix& map) {
  if (map.size() != codomain.dim()) throw Error("map rows do not match the codomain dimension");
  for (const Vector& row : map) {
    if (row.size() != domain.dim()) throw Error("map columns do not match the domain dimension");
  }
}

void CheckInjective(const Matrix& map, std::size_t cols) {
  Matrix columns(cols, Vector(map.size()));
  for (std::size_t r = 0; r < map.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) columns[c][r] = map[r][c];
  }
  if (Rank(columns) < cols) throw NotInjective("the linear map has a nontrivial kernel");
}

// min t with <h, M x> <= t for codomain facets h, on the face <g, x> = 1.
NormWitness FacetPairs(const Ball& domain, const Ball& codomain, const Matrix& map) {
  const std::size_t d = domain.dim();
  std::vector<Vector> pulled;
  for (const Vector& h : codomain.Facets()) pulled.push_back(Transposed(map, h, d));
  std::optional<NormWitness> best;
  for (const Vector* g : HalfFacets(domain)) {
    lp::Problem problem(d + 1);
    Vector objective(d + 1, Rat(0));
    objective[d] = -1;
    problem.SetObjective(objective);
    for (const Vector& p : pulled) {
      Vector row(p);
      row.push_back(-1);
      problem.AddConstraint(std::move(row), lp::Sense::kLessEqual, 0);
    }
    for (const Vector& other : domain.Facets()) {
      Vector row(other);
      row.push_back(0);
      problem.AddConstraint(std::move(row), &other == g ? lp::Sense::kEqual : lp::Sense::kLessEqual, 1);
    }
    lp::Solution sol = lp::Maximize(problem);
    if (sol.status != lp::Status::kOptimal) throw Error("minimal gain LP failed on a domain facet");
    Rat t = -sol.value;
    if (!best || t < best->value) {
      sol.x.pop_back();
      best = NormWitness{t, std::move(sol.x)};
    }
  }
  return *best;
}

// 1 / max{<g, x> : M x in conv(codomain vertices)}.
NormWitness VertexHull(const Ball& domain, const Ball& codomain, const Matrix& map) {
  const std::size_t d = domain.dim();
  const auto& w = codomain.vertices();
  const std::size_t n = w.size();
  std::optional<NormWitness> best;
  for (const Vector* g : HalfFacets(domain)) {
    lp::Problem problem(n + d);
    for (std::size_t k = 0; k < n; ++k) problem.SetNonnegative(k);
    Vector objective(n + d, Rat(0));
    for (std::size_t c = 0; c < d; ++c) objective[n + c] = (*g)[c];
    problem.SetObjective(std::move(objective));
    for (std::size_t r = 0; r < codomain.dim(); ++r) {
      Vector row(n + d, Rat(0));
      for (std::size_t k = 0; k < n; ++k) row[k] = -w[k][r];
      for (std::size_t c = 0; c < d; ++c) row[n + c] = map[r][c];
      problem.AddConstraint(std::move(row), lp::Sense::kEqual, 0);
    }
    Vector total(n + d, Rat(0));
    for (std::size_t k = 0; k < n; ++k) total[k] = 1;
    problem.AddConstraint(std::move(total), lp::Sense::kLessEqual, 1);
    lp::Solution sol = lp::Maximize(problem);
    if (sol.status != lp::Status::kOptimal) throw Error("minimal gain LP failed on a domain facet");
    if (!best || sol.value > best->value) {
      best = NormWitness{sol.value, Vector(sol.x.begin() + static_cast<std::ptrdiff_t>(n), sol.x.end())};
    }
  }
  Rat inv = 1 / best->value;
  return NormWitness{inv, Scale(best->point, inv)};
}

}  // namespace

BasedMorphism::BasedMorphism(BasedSpace domain, BasedSpace codomain, std::vector<std::size_t> targets)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), targets_(std::move(targets)) {
  if (targets_.size() != domain_.dim()) throw Error("basis map is not total on the domain labels");
  std::set<std::size_t> seen;
  for (std::size_t t : targets_) {
    if (t >= codomain_.dim()) throw Error("basis map target out of range");
    if (!seen.insert(t).second) {
      throw NotInjective("two domain labels map to codomain label '" + codomain_.labels()[t] + "'");
    }
  }
}

BasedMorphism BasedMorphism::FromLabels(BasedSpace domain, BasedSpace codomain,
                                        const std::map<std::string, std::string>& basis_map) {
  std::vector<std::size_t> targets;
  for (const std::string& label : domain.labels()) {
    auto it = basis_map.find(label);
    if (it == basis_map.end()) throw Error("basis map does not mention domain label '" + label + "'");
    targets.push_back(codomain.IndexOf(it->second));
  }
  if (basis_map.size() != domain.dim()) throw Error("basis map mentions labels outside the domain");
  return BasedMorphism(std::move(domain), std::move(codomain), std::move(targets));
}

const std::string& BasedMorphism::MapLabel(const std::string& label) const {
  return codomain_.labels()[targets_[domain_.IndexOf(label)]];
}

std::vector<std::pair<std::string, std::string>> BasedMorphism::LabelPairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t k = 0; k < targets_.size(); ++k) {
    out.emplace_back(domain_.labels()[k], codomain_.labels()[targets_[k]]);
  }
  return out;
}

Vector BasedMorphism::Apply(std::span<const Rat> x) const {
  Vector out(codomain_.dim(), Rat(0));
  for (std::size_t k = 0; k < targets_.size(); ++k) out[targets_[k]] = x[k];
  return out;
}

Matrix BasedMorphism::AsMatrix() const {
  Matrix m(codomain_.dim(), Vector(domain_.dim(), Rat(0)));
  for (std::size_t k = 0; k < targets_.size(); ++k) m[targets_[k]][k] = 1;
  return m;
}

BasedMorphism Identity(const BasedSpace& space) {
  std::vector<std::size_t> targets(space.dim());
  for (std::size_t k = 0; k < targets.size(); ++k) targets[k] = k;
  return BasedMorphism(space, space, std::move(targets));
}

BasedMorphism Inclusion(const BasedSpace& sub, const BasedSpace& super) {
  std::vector<std::size_t> targets;
  for (const std::string& label : sub.labels()) targets.push_back(super.IndexOf(label));
  return BasedMorphism(sub, super, std::move(targets));
}

BasedMorphism Compose(const BasedMorphism& g, const BasedMorphism& f) {
  if (f.codomain().labels() != g.domain().labels()) throw Error("composing morphisms with mismatched spaces");
  std::vector<std::size_t> targets;
  for (std::size_t t : f.targets()) targets.push_back(g.targets()[t]);
  return BasedMorphism(f.domain(), g.codomain(), std::move(targets));
}

bool SameLabelMap(const BasedMorphism& a, const BasedMorphism& b) { return a.LabelPairs() == b.LabelPairs(); }

NormWitness OperatorNormWitness(const Ball& domain, const Ball& codomain, const Matrix& map) {
  CheckShapes(domain, codomain, map);
  NormWitness best{Rat(0), ZeroVector(domain.dim())};
  const auto& targets = codomain.vertices();
  for (const Vector& v : domain.vertices()) {
    Vector image = Apply(map, v);
    // Vertices of the codomain have norm exactly one.
    Rat g = std::binary_search(targets.begin(), targets.end(), image) ? Rat(1) : Gauge(codomain, image);
    if (g > best.value) best = {g, v};
  }
  return best;
}

NormWitness MinGainWitness(const Ball& domain, const Ball& codomain, const Matrix& map, MinGainMethod method) {
  CheckShapes(domain, codomain, map);
  CheckInjective(map, domain.dim());
  if (method == MinGainMethod::kAuto) {
    method = codomain.has_facets() || codomain.dim() <= 6 ? MinGainMethod::kFacetPairs : MinGainMethod::kVertexHull;
  }
  return method == MinGainMethod::kFacetPairs ? FacetPairs(domain, codomain, map) : VertexHull(domain, codomain, map);
}

NormWitness OperatorNormWitness(const BasedMorphism& f) {
  return OperatorNormWitness(f.domain().ball(), f.codomain().ball(), f.AsMatrix());
}

Rat OperatorNorm(const BasedMorphism& f) { return OperatorNormWitness(f).value; }

NormWitness MinGainWitness(const BasedMorphism& f, MinGainMethod method) {
  return MinGainWitness(f.domain().ball(), f.codomain().ball(), f.AsMatrix(), method);
}

Rat MinGain(const BasedMorphism& f, MinGainMethod method) { return MinGainWitness(f, method).value; }

IsometryMargin Margin(const BasedMorphism& f) { return {OperatorNorm(f), MinGain(f)}; }

bool CertifyIsometry(const BasedMorphism& f) { return OperatorNorm(f) == 1 && MinGain(f) == 1; }

Rat EpsMargin(const IsometryMargin& m) {
  Rat inv = 1 / m.lower;
  return (m.upper > inv ? m.upper : inv) - 1;
}

Rat EpsMargin(const BasedMorphism& f) { return EpsMargin(Margin(f)); }

}  // namespace ratbase
