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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pauliflow/field.hpp"
#include "pauliflow/random.hpp"

namespace pauliflow {

using VarId = std::uint32_t;

inline constexpr std::size_t kMaxTerms = 1'000'000;

/// Polynomial over GF(2) in which every variable has degree at most one,
/// stored as a sorted, duplicate-free XOR of monomials. A monomial is a sorted
/// list of distinct variables; the empty monomial is the constant 1.
class MultiAffineExpr {
 public:
  using Monomial = std::vector<VarId>;

  MultiAffineExpr() = default;
  static MultiAffineExpr constant(bool value);
  static MultiAffineExpr variable(VarId v);
  /// Throws NotMultiAffine if a monomial repeats a variable or the term cap is
  /// exceeded. Equal monomials cancel in pairs.
  static MultiAffineExpr from_terms(std::vector<Monomial> terms);

  [[nodiscard]] const std::vector<Monomial>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] std::set<VarId> variables() const;

  /// Value at a {0,1} point; `bit(v)` gives the value of variable v.
  [[nodiscard]] bool evaluate_bits(const std::function<bool(VarId)>& bit) const;

  [[nodiscard]] std::string to_string(const std::function<std::string(VarId)>& name) const;

  MultiAffineExpr& operator+=(const MultiAffineExpr& o);
  friend MultiAffineExpr operator+(MultiAffineExpr a, const MultiAffineExpr& b) { return a += b; }
  /// Throws NotMultiAffine when the factors share a variable or the product
  /// exceeds the term cap.
  friend MultiAffineExpr operator*(const MultiAffineExpr& a, const MultiAffineExpr& b);
  friend bool operator==(const MultiAffineExpr&, const MultiAffineExpr&) = default;

 private:
  std::vector<Monomial> terms_;
};

enum class Axis { Row, Column };

struct VarPlacement {
  Axis axis;
  std::size_t index;

  friend bool operator==(const VarPlacement&, const VarPlacement&) = default;
};

/// Matrix of multi-affine entries. var_index records, for declared variables,
/// the single row or column they may occur in.
class VarMatrix {
 public:
  VarMatrix(std::size_t rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const MultiAffineExpr& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, MultiAffineExpr e);

  void declare(VarId v, Axis axis, std::size_t index);
  [[nodiscard]] const std::map<VarId, VarPlacement>& var_index() const { return var_index_; }

  void set_var_name(VarId v, std::string name) { var_names_[v] = std::move(name); }
  [[nodiscard]] std::string var_name(VarId v) const;

  void set_labels(std::vector<std::string> rows, std::vector<std::string> cols);
  [[nodiscard]] const std::vector<std::string>& row_labels() const { return row_labels_; }
  [[nodiscard]] const std::vector<std::string>& col_labels() const { return col_labels_; }

  /// Variables occurring in some entry.
  [[nodiscard]] std::set<VarId> variables() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiAffineExpr> entries_;
  std::map<VarId, VarPlacement> var_index_;
  std::map<VarId, std::string> var_names_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

struct ConfinementViolation {
  VarId var;
  std::size_t row;
  std::size_t col;
};

/// Occurrences outside a declared variable's row or column, or, for an
/// undeclared variable, occurrences that share neither a row nor a column
/// with its first occurrence. Empty means valid.
std::vector<ConfinementViolation> validate_confinement(const VarMatrix& m);

/// Assignment of field elements to variables, all in one field.
class Valuation {
 public:
  explicit Valuation(FieldContext ctx) : ctx_(ctx) {}

  [[nodiscard]] const FieldContext& ctx() const { return ctx_; }
  /// Throws FieldError if value is not in ctx().
  void set(VarId v, FieldElement value);
  [[nodiscard]] std::optional<FieldElement> get(VarId v) const;

  static Valuation random(const FieldContext& ctx, const std::set<VarId>& vars, Rng& rng);

 private:
  FieldContext ctx_;
  std::map<VarId, FieldElement> values_;
};

/// Throws Error when a variable has no value.
FieldElement evaluate(const MultiAffineExpr& e, const Valuation& sigma);
FieldMatrix evaluate(const VarMatrix& m, const Valuation& sigma);

/// Smallest k >= 1 with 2^k * p >= t. Throws Error unless 0 < p <= 1/2, and
/// LimitExceeded when k would exceed kMaxFieldDegree.
unsigned required_degree(std::size_t t, double p);

struct RankSample {
  std::size_t rank;
  unsigned k;
};

/// Rank of m at a uniform random point of GF(2^k)^t, k = required_degree(t, p).
RankSample sample_rank(const VarMatrix& m, double p, Rng& rng);

/// One randomized test of "some {0,1} valuation gives rank >= r". Never true
/// when the answer is no; true with probability >= 1 - p when it is yes.
/// r <= 0 is true and r > min(rows, cols) is false without sampling.
bool rank_at_least(const VarMatrix& m, long long r, double p, Rng& rng);

}  // namespace pauliflow
