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

#include "ratbase/rational.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

#include "ratbase/errors.hpp"

namespace ratbase {
namespace {

bool IsIntegerText(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class ParseInteger(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat ParseRat(std::string_view text) {
  std::string_view s = Trim(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!IsIntegerText(num) || !IsIntegerText(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = ParseInteger(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rat r(ParseInteger(num), d);
  r.canonicalize();
  return r;
}

std::string ToString(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Vector ParseVector(std::string_view text) {
  Vector out;
  std::string_view s = Trim(text);
  if (s.empty()) throw ParseError("empty vector");
  while (true) {
    auto comma = s.find(',');
    out.push_back(ParseRat(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string ToString(std::span<const Rat> v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) out += ", ";
    out += ToString(v[k]);
  }
  return out + ")";
}

Rat Abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

Rat Dot(std::span<const Rat> a, std::span<const Rat> b) {
  assert(a.size() == b.size());
  Rat sum = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && b[k] != 0) sum += a[k] * b[k];
  }
  return sum;
}

Vector Add(std::span<const Rat> a, std::span<const Rat> b) {
  assert(a.size() == b.size());
  Vector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

Vector Sub(std::span<const Rat> a, std::span<const Rat> b) {
  assert(a.size() == b.size());
  Vector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

Vector Scale(std::span<const Rat> a, const Rat& factor) {
  Vector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * factor;
  return out;
}

Vector Negate(std::span<const Rat> a) {
  Vector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = -a[k];
  return out;
}

bool IsZero(std::span<const Rat> a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

Vector UnitVector(std::size_t dim, std::size_t index) {
  Vector out(dim, Rat(0));
  out.at(index) = 1;
  return out;
}

Vector ZeroVector(std::size_t dim) { return Vector(dim, Rat(0)); }

Vector Apply(const Matrix& m, std::span<const Rat> x) {
  Vector out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) out[r] = Dot(m[r], x);
  return out;
}

std::size_t Rank(std::span<const Vector> rows) {
  if (rows.empty()) return 0;
  Matrix a(rows.begin(), rows.end());
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      Rat factor = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

Vector PrimitiveDirection(std::span<const Rat> v) {
  mpz_class lcm = 1;
  for (const Rat& x : v) {
    if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  mpz_class gcd = 0;
  for (const Rat& x : v) {
    if (x == 0) continue;
    mpz_class n = x.get_num() * (lcm / x.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (gcd == 0) return Vector(v.begin(), v.end());
  Vector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) {
      out[k] = 0;
    } else {
      out[k] = Rat(mpz_class(v[k].get_num() * (lcm / v[k].get_den()) / gcd));
    }
  }
  return out;
}

Rat SimplestBetween(const Rat& lo, const Rat& hi) {
  assert(lo < hi);
  // Stern-Brocot descent for positive intervals; shift otherwise.
  if (lo < 0 && hi > 0) return 0;
  if (hi <= 0) return -SimplestBetween(-hi, -lo);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  Rat candidate(fl + 1);
  if (candidate < hi) return candidate;
  // lo and hi lie in [fl, fl + 1]; recurse on the reciprocals of the
  // fractional parts.
  Rat lo_frac = lo - Rat(fl);
  Rat hi_frac = hi - Rat(fl);
  if (lo_frac == 0) {
    // (0, hi_frac): take 1/(floor(1/hi_frac) + 1).
    Rat inv = 1 / hi_frac;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
    return Rat(fl) + Rat(1, 1) / Rat(q + 1);
  }
  Rat inner = SimplestBetween(1 / hi_frac, 1 / lo_frac);
  return Rat(fl) + 1 / inner;
}

}  // namespace ratbase
