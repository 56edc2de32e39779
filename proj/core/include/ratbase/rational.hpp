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

#ifndef RATBASE_RATIONAL_HPP_
#define RATBASE_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ratbase {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Rat = mpq_class;

/// Coordinates of a vector in the basis of its ambient space.
using Vector = std::vector<Rat>;

/// Row-major dense matrix; `m[r]` is row r.
using Matrix = std::vector<Vector>;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed input or a
/// zero denominator. The result is canonicalized.
Rat ParseRat(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rat& value);

/// Parses a comma separated list of rationals, e.g. "8/5,8/5,-3/5".
Vector ParseVector(std::string_view text);

std::string ToString(std::span<const Rat> v);

Rat Abs(const Rat& value);

Rat Dot(std::span<const Rat> a, std::span<const Rat> b);
Vector Add(std::span<const Rat> a, std::span<const Rat> b);
Vector Sub(std::span<const Rat> a, std::span<const Rat> b);
Vector Scale(std::span<const Rat> a, const Rat& factor);
Vector Negate(std::span<const Rat> a);
bool IsZero(std::span<const Rat> a);
Vector UnitVector(std::size_t dim, std::size_t index);
Vector ZeroVector(std::size_t dim);

Vector Apply(const Matrix& m, std::span<const Rat> x);

/// Rank of the row set, by exact Gaussian elimination.
std::size_t Rank(std::span<const Vector> rows);

/// Multiplies by a positive rational so that the entries become coprime
/// integers. The zero vector is returned unchanged.
Vector PrimitiveDirection(std::span<const Rat> v);

/// The rational with the smallest denominator (then smallest numerator)
/// strictly inside the open interval (lo, hi). Requires lo < hi.
Rat SimplestBetween(const Rat& lo, const Rat& hi);

}  // namespace ratbase

#endif  // RATBASE_RATIONAL_HPP_
