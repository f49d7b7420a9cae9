// Copyright 2026 The pauliflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace pauliflow {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent open graph, labelling, or flow input.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Syntax or schema error in a JSON document; the message carries a
/// source:line:col position or a field path such as edges[3].
class ParseError : public GraphError {
 public:
  using GraphError::GraphError;
};

class FieldError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public FieldError {
 public:
  DivisionByZero() : FieldError("division by zero in GF(2^k)") {}
};

/// Product of two expressions sharing a variable, or a term-count overflow.
class NotMultiAffine : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// find_labelling alternated X/Z on one vertex for the whole retry budget.
class RetryBudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search refused because the instance exceeds the configured limits.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace pauliflow
