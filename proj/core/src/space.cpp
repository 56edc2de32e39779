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

#include "ratbase/space.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "ratbase/errors.hpp"
#include "ratbase/lp.hpp"

namespace ratbase {
namespace {

constexpr std::size_t kMaxPatternDim = 24;

// Is points[index] a convex combination of the other (distinct) points?
bool InHullOfOthers(std::span<const Vector> points, std::size_t index) {
  const Vector& p = points[index];
  std::vector<const Vector*> others;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k != index && points[k] != p) others.push_back(&points[k]);
  }
  if (others.empty()) return false;
  lp::Problem problem(others.size());
  problem.SetAllNonnegative();
  for (std::size_t c = 0; c < p.size(); ++c) {
    Vector row(others.size());
    for (std::size_t k = 0; k < others.size(); ++k) row[k] = (*others[k])[c];
    problem.AddConstraint(std::move(row), lp::Sense::kEqual, p[c]);
  }
  problem.AddConstraint(Vector(others.size(), Rat(1)), lp::Sense::kEqual, 1);
  return lp::Maximize(problem).status == lp::Status::kOptimal;
}

void CheckPatternDim(std::size_t dim) {
  if (dim > kMaxPatternDim) {
    throw BudgetExceeded("sign-pattern enumeration over " + std::to_string(dim) + " labels exceeds the limit of " +
                         std::to_string(kMaxPatternDim));
  }
}

// max over vertices v and facets f of <f, T_s v>, tracking the argmax.
void ScanPattern(const Ball& ball, const SignPattern& s, ConstantWitness& best) {
  const auto& facets = ball.Facets();
  for (const Vector& v : ball.vertices()) {
    Vector tv = ApplySigns(s, v);
    Rat g = 0;
    for (const Vector& f : facets) {
      Rat value = Dot(f, tv);
      if (value > g) g = value;
    }
    if (g > best.value) best = {g, s, v};
  }
}

std::vector<std::size_t> Indices(const BasedSpace& space, std::span<const std::string> sub) {
  if (sub.empty()) throw Error("empty label subset");
  std::vector<bool> chosen(space.dim(), false);
  for (const std::string& label : sub) chosen[space.IndexOf(label)] = true;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < space.dim(); ++k) {
    if (chosen[k]) out.push_back(k);
  }
  return out;
}

std::vector<std::string> Pick(const std::vector<std::string>& labels, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t k : idx) out.push_back(labels[k]);
  return out;
}

ValidationCheck Check(std::string name, bool passed, std::string detail = "") {
  return {std::move(name), passed, std::move(detail)};
}

}  // namespace

BasedSpace::BasedSpace(std::vector<std::string> labels, Ball ball, std::string name)
    : labels_(std::move(labels)), ball_(std::move(ball)), name_(std::move(name)) {
  if (labels_.size() != ball_.dim()) {
    throw Error("space has " + std::to_string(labels_.size()) + " labels but a ball of dimension " +
                std::to_string(ball_.dim()));
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw Error("basis labels are not distinct");
}

std::optional<std::size_t> BasedSpace::Find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t BasedSpace::IndexOf(const std::string& label) const {
  auto k = Find(label);
  if (!k) throw Error("unknown basis label '" + label + "'");
  return *k;
}

BasedSpace BasedSpace::WithName(std::string name) const { return BasedSpace(labels_, ball_, std::move(name)); }

bool operator==(const BasedSpace& a, const BasedSpace& b) {
  return a.labels() == b.labels() && a.ball() == b.ball();
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

ValidationReport Validate(const BasedSpace& space) {
  return ValidateVertexList(space.labels(), space.ball().vertices());
}

ValidationReport ValidateVertexList(std::span<const std::string> labels, std::span<const Vector> vertices) {
  ValidationReport report;
  const std::size_t d = labels.size();
  std::vector<Vector> pts(vertices.begin(), vertices.end());
  for (const Vector& v : pts) {
    if (v.size() != d) {
      report.checks.push_back(Check("dimension", false, "vertex " + ToString(v) + " has the wrong length"));
      return report;
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::string asym;
  for (const Vector& v : pts) {
    if (!std::binary_search(pts.begin(), pts.end(), Negate(v))) {
      asym = "missing the negative of " + ToString(v);
      break;
    }
  }
  report.checks.push_back(Check("symmetric", asym.empty(), asym));

  const bool full = d > 0 && Rank(pts) == d;
  report.checks.push_back(Check("full_dimensional", full, full ? "" : "vertices do not span the space"));

  // Extremality is judged in conv(P ∪ -P), the ball the list describes.
  std::vector<Vector> sym = pts;
  for (const Vector& v : pts) sym.push_back(Negate(v));
  std::sort(sym.begin(), sym.end());
  sym.erase(std::unique(sym.begin(), sym.end()), sym.end());
  std::string redundant;
  for (std::size_t k = 0; k < sym.size(); ++k) {
    if (IsZero(sym[k]) || InHullOfOthers(sym, k)) {
      redundant = ToString(sym[k]) + " is not an extreme point";
      break;
    }
  }
  report.checks.push_back(Check("irredundant", redundant.empty(), redundant));

  if (full) {
    Ball ball = Ball::FromPoints(pts, d);
    std::string bad;
    for (std::size_t b = 0; b < d && bad.empty(); ++b) {
      Rat g = GaugeLp(ball, UnitVector(d, b));
      if (g != 1) bad = "norm of " + labels[b] + " is " + ToString(g);
    }
    report.checks.push_back(Check("unit_basis", bad.empty(), bad));
  } else {
    report.checks.push_back(Check("unit_basis", false, "undefined without full dimension"));
  }
  report.checks.push_back(Check("rational", true, "exact by construction"));
  return report;
}

Matrix SignOperator(const BasedSpace& space, const SignPattern& s) {
  if (s.size() != space.dim()) throw Error("sign pattern is not total on the basis");
  Matrix m(space.dim(), Vector(space.dim(), Rat(0)));
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < -1 || s[k] > 1) throw Error("sign pattern entries must be -1, 0 or 1");
    m[k][k] = s[k];
  }
  return m;
}

Vector ApplySigns(const SignPattern& s, std::span<const Rat> x) {
  Vector out(x.begin(), x.end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (s[k] == 0) {
      out[k] = 0;
    } else if (s[k] < 0) {
      out[k] = -out[k];
    }
  }
  return out;
}

ConstantWitness UnconditionalConstantWitness(const BasedSpace& space) {
  const std::size_t n = space.dim();
  CheckPatternDim(n);
  ConstantWitness best{Rat(0), SignPattern(n, 1), {}};
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    SignPattern s(n, 1);
    for (std::size_t k = 1; k < n; ++k) {
      if (mask >> (k - 1) & 1) s[k] = -1;
    }
    ScanPattern(space.ball(), s, best);
  }
  return best;
}

Rat UnconditionalConstant(const BasedSpace& space) { return UnconditionalConstantWitness(space).value; }

ConstantWitness SuppressionConstantWitness(const BasedSpace& space) {
  const std::size_t n = space.dim();
  CheckPatternDim(n);
  ConstantWitness best{Rat(0), SignPattern(n, 1), {}};
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    SignPattern s(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      if (mask >> k & 1) s[k] = 1;
    }
    ScanPattern(space.ball(), s, best);
  }
  return best;
}

Rat SuppressionConstant(const BasedSpace& space) { return SuppressionConstantWitness(space).value; }

BasedSpace OneBasing(const BasedSpace& space, Budget budget) {
  const std::size_t n = space.dim();
  CheckPatternDim(n);
  const auto& facets = space.ball().Facets(budget);
  std::vector<Vector> normals;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    SignPattern s(n, 1);
    for (std::size_t k = 1; k < n; ++k) {
      if (mask >> (k - 1) & 1) s[k] = -1;
    }
    for (const Vector& f : facets) normals.push_back(ApplySigns(s, f));
  }
  return BasedSpace(space.labels(), Ball::FromFacets(normals, n, budget), space.name());
}

BasedSpace Subspace(const BasedSpace& space, std::span<const std::string> sub, Budget budget) {
  std::vector<std::size_t> idx = Indices(space, sub);
  if (idx.size() == space.dim()) return space;
  std::vector<Vector> normals;
  for (const Vector& f : space.ball().Facets(budget)) {
    Vector r;
    for (std::size_t k : idx) r.push_back(f[k]);
    normals.push_back(std::move(r));
  }
  return BasedSpace(Pick(space.labels(), idx), Ball::FromFacets(normals, idx.size(), budget), space.name());
}

BasedSpace ProjectToLabels(const BasedSpace& space, std::span<const std::string> sub, Budget budget) {
  std::vector<std::size_t> idx = Indices(space, sub);
  Matrix map;
  for (std::size_t k : idx) map.push_back(UnitVector(space.dim(), k));
  return BasedSpace(Pick(space.labels(), idx), Project(space.ball(), map, budget), space.name());
}

BasedSpace Permuted(const BasedSpace& space, std::span<const std::size_t> order) {
  std::vector<std::size_t> idx(order.begin(), order.end());
  std::vector<Vector> vertices;
  for (const Vector& v : space.ball().vertices()) {
    Vector w;
    for (std::size_t k : idx) w.push_back(v[k]);
    vertices.push_back(std::move(w));
  }
  return BasedSpace(Pick(space.labels(), idx), Ball::FromExtremePoints(space.dim(), std::move(vertices)),
                    space.name());
}

BasedSpace Relabeled(const BasedSpace& space, std::vector<std::string> labels) {
  return BasedSpace(std::move(labels), space.ball(), space.name());
}

std::vector<std::string> DefaultLabels(std::size_t dim) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= dim; ++k) out.push_back("e" + std::to_string(k));
  return out;
}

}  // namespace ratbase
