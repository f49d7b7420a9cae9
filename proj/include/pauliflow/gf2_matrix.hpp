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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pauliflow {

/// Dense matrix over GF(2), rows packed into 64-bit words.
///
/// Rows and columns may carry vertex names. They are bookkeeping only: matrix
/// equality and arithmetic look at the bits.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  /// Builds a matrix from strings of '0'/'1', one per row. Handy in tests.
  static Gf2Matrix from_strings(std::span<const std::string_view> rows);
  static Gf2Matrix from_strings(std::initializer_list<std::string_view> rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::size_t words_per_row() const { return stride_; }

  [[nodiscard]] bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c);

  [[nodiscard]] std::span<const std::uint64_t> row_words(std::size_t r) const;
  [[nodiscard]] std::span<std::uint64_t> row_words(std::size_t r);

  /// Row r += row s.
  void add_row(std::size_t r, std::size_t s);
  void swap_rows(std::size_t r, std::size_t s);

  [[nodiscard]] const std::vector<std::string>& row_labels() const { return row_labels_; }
  [[nodiscard]] const std::vector<std::string>& col_labels() const { return col_labels_; }
  /// Either list may be empty (no labels). Non-empty lists must match the
  /// dimension and contain no duplicates.
  void set_labels(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

  [[nodiscard]] Gf2Matrix transpose() const;
  [[nodiscard]] bool is_zero() const;
  /// Rows of '0'/'1' separated by newlines.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b);
  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

/// Row rank over GF(2).
std::size_t gf2_rank(const Gf2Matrix& m);

/// Some N with m * N = Id, or nullopt when m lacks full row rank. A matrix
/// with zero rows is right-invertible (N is cols x 0).
///
/// N is built from the reduced row echelon form with pivots taken at the first
/// nonzero row, so the result is deterministic.
std::optional<Gf2Matrix> gf2_right_inverse(const Gf2Matrix& m);

/// Greedily picks linearly independent columns, visiting them in `order`; a
/// column is kept when it is independent of the columns kept before it. The
/// result lists kept columns in visiting order and has gf2_rank(m) entries
/// when `order` is a permutation of all columns.
std::vector<std::size_t> gf2_independent_columns(const Gf2Matrix& m, std::span<const std::size_t> order);

/// Same with columns visited left to right.
std::vector<std::size_t> gf2_independent_columns(const Gf2Matrix& m);

/// Greedy row basis, earliest rows first.
std::vector<std::size_t> gf2_independent_rows(const Gf2Matrix& m);

}  // namespace pauliflow
