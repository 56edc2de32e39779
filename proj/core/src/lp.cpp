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

#include "ratbase/lp.hpp"

#include <cassert>
#include <cstdint>
#include <utility>

namespace ratbase::lp {
namespace {

// Compact tableau: rows 0..m-1 constraints, row m the objective, row m+1 the
// phase-one objective. Column n is the artificial variable, column n+1 the
// right-hand side. N holds the labels of nonbasic columns, B those of basic
// rows; original variables are 0..n-1, slacks n..n+m-1, artificial -1.
class Tableau {
 public:
  Tableau(const Matrix& a, const Vector& b, const Vector& c)
      : m_(b.size()), n_(c.size()), d_(m_ + 2, Vector(n_ + 2, Rat(0))), basic_(m_), nonbasic_(n_ + 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) d_[i][j] = a[i][j];
      d_[i][n_] = -1;
      d_[i][n_ + 1] = b[i];
      basic_[i] = static_cast<long>(n_ + i);
    }
    for (std::size_t j = 0; j < n_; ++j) {
      nonbasic_[j] = static_cast<long>(j);
      d_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;
    d_[m_ + 1][n_] = 1;
  }

  Solution Solve() {
    Solution out;
    std::size_t r = 0;
    for (std::size_t i = 1; i < m_; ++i) {
      if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    }
    if (m_ > 0 && d_[r][n_ + 1] < 0) {
      Pivot(r, n_);
      if (!Run(2) || d_[m_ + 1][n_ + 1] < 0) {
        out.status = Status::kInfeasible;
        return out;
      }
      for (std::size_t i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        std::size_t s = n_ + 1;
        for (std::size_t j = 0; j <= n_; ++j) {
          if (d_[i][j] != 0 && (s == n_ + 1 || nonbasic_[j] < nonbasic_[s])) s = j;
        }
        if (s != n_ + 1) Pivot(i, s);
      }
    }
    bool bounded = Run(1);
    out.x.assign(n_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] >= 0 && static_cast<std::size_t>(basic_[i]) < n_) out.x[basic_[i]] = d_[i][n_ + 1];
    }
    out.status = bounded ? Status::kOptimal : Status::kUnbounded;
    out.value = d_[m_][n_ + 1];
    return out;
  }

 private:
  void Pivot(std::size_t r, std::size_t s) {
    Rat inv = 1 / d_[r][s];
    Vector& pivot_row = d_[r];
    for (std::size_t i = 0; i < m_ + 2; ++i) {
      if (i == r || d_[i][s] == 0) continue;
      Vector& row = d_[i];
      Rat factor = row[s] * inv;
      for (std::size_t j = 0; j < n_ + 2; ++j) {
        if (pivot_row[j] != 0) row[j] -= pivot_row[j] * factor;
      }
      row[s] = pivot_row[s] * factor;
    }
    for (std::size_t j = 0; j < n_ + 2; ++j) {
      if (j != s && pivot_row[j] != 0) pivot_row[j] *= inv;
    }
    for (std::size_t i = 0; i < m_ + 2; ++i) {
      if (i != r && d_[i][s] != 0) d_[i][s] *= -inv;
    }
    pivot_row[s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  // Returns false when the objective is unbounded.
  bool Run(int phase) {
    const std::size_t obj = m_ + static_cast<std::size_t>(phase) - 1;
    while (true) {
      std::size_t s = n_ + 1;
      for (std::size_t j = 0; j <= n_; ++j) {
        if (nonbasic_[j] == -phase) continue;
        if (d_[obj][j] < 0 && (s == n_ + 1 || nonbasic_[j] < nonbasic_[s])) s = j;
      }
      if (s == n_ + 1) return true;
      std::size_t r = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        if (d_[i][s] <= 0) continue;
        if (r == m_) {
          r = i;
          continue;
        }
        // Compare d[i][rhs]/d[i][s] against d[r][rhs]/d[r][s].
        Rat lhs = d_[i][n_ + 1] * d_[r][s];
        Rat rhs = d_[r][n_ + 1] * d_[i][s];
        if (lhs < rhs || (lhs == rhs && basic_[i] < basic_[r])) r = i;
      }
      if (r == m_) return false;
      Pivot(r, s);
    }
  }

  std::size_t m_;
  std::size_t n_;
  Matrix d_;
  std::vector<long> basic_;
  std::vector<long> nonbasic_;
};

}  // namespace

Problem::Problem(std::size_t num_variables)
    : num_variables_(num_variables), objective_(num_variables, Rat(0)), nonnegative_(num_variables, false) {}

void Problem::SetObjective(Vector objective) {
  assert(objective.size() == num_variables_);
  objective_ = std::move(objective);
}

void Problem::AddConstraint(Vector coefficients, Sense sense, Rat rhs) {
  assert(coefficients.size() == num_variables_);
  constraints_.push_back({std::move(coefficients), sense, std::move(rhs)});
}

void Problem::SetNonnegative(std::size_t variable) { nonnegative_.at(variable) = true; }

void Problem::SetAllNonnegative() { nonnegative_.assign(num_variables_, true); }

Solution MaximizeStandard(const Matrix& a, const Vector& b, const Vector& c) {
  return Tableau(a, b, c).Solve();
}

Solution Maximize(const Problem& problem) {
  // Free variables split as x = x+ - x-.
  const std::size_t n = problem.num_variables();
  std::vector<std::size_t> plus(n), minus(n, SIZE_MAX);
  std::size_t columns = 0;
  for (std::size_t k = 0; k < n; ++k) {
    plus[k] = columns++;
    if (!problem.nonnegative()[k]) minus[k] = columns++;
  }
  auto expand = [&](const Vector& coeffs, const Rat& sign) {
    Vector row(columns, Rat(0));
    for (std::size_t k = 0; k < n; ++k) {
      if (coeffs[k] == 0) continue;
      row[plus[k]] = sign * coeffs[k];
      if (minus[k] != SIZE_MAX) row[minus[k]] = -sign * coeffs[k];
    }
    return row;
  };
  Matrix a;
  Vector b;
  for (const Constraint& con : problem.constraints()) {
    if (con.sense != Sense::kGreaterEqual) {
      a.push_back(expand(con.coefficients, Rat(1)));
      b.push_back(con.rhs);
    }
    if (con.sense != Sense::kLessEqual) {
      a.push_back(expand(con.coefficients, Rat(-1)));
      b.push_back(-con.rhs);
    }
  }
  Vector c = expand(problem.objective(), Rat(1));
  Solution standard = MaximizeStandard(a, b, c);
  Solution out;
  out.status = standard.status;
  out.value = standard.value;
  if (standard.status == Status::kOptimal) {
    out.x.assign(n, Rat(0));
    for (std::size_t k = 0; k < n; ++k) {
      out.x[k] = standard.x[plus[k]];
      if (minus[k] != SIZE_MAX) out.x[k] -= standard.x[minus[k]];
    }
  }
  return out;
}

}  // namespace ratbase::lp
