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

#ifndef RATBASE_ERRORS_HPP_
#define RATBASE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ratbase {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input describing an invalid object.
class ValidationFailed : public Error {
 public:
  using Error::Error;
};

class NotFullDimensional : public Error {
 public:
  using Error::Error;
};

/// A vertex, facet, ray or catalog budget was exceeded. Results are never
/// approximated to stay inside a budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotInjective : public Error {
 public:
  using Error::Error;
};

class NotIsometric : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class InfeasibleSandwich : public Error {
 public:
  using Error::Error;
};

}  // namespace ratbase

#endif  // RATBASE_ERRORS_HPP_
