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

#include "pauliflow/gf2_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "pauliflow/error.hpp"
#include "pauliflow/simd/kernels.hpp"

namespace pauliflow {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t cols) { return (cols + kWordBits - 1) / kWordBits; }

void check_labels(const std::vector<std::string>& labels, std::size_t expected, const char* what) {
  if (labels.empty()) return;
  if (labels.size() != expected) {
    throw DimensionMismatch(std::string(what) + " labels do not match the matrix dimension");
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw DimensionMismatch(std::string("duplicate ") + what + " label '" + l + "'");
  }
}

// Forward elimination; returns the pivot column of each pivot row in order.
std::vector<std::size_t> echelon_pivots(Gf2Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && !a.get(p, c)) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, rank);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a.get(i, c)) a.add_row(i, rank);
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), bits_(rows * words_for(cols), 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_strings(std::span<const std::string_view> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged rows in matrix literal");
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw DimensionMismatch("matrix literal entries must be 0 or 1");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_strings(std::initializer_list<std::string_view> rows) {
  return from_strings(std::span<const std::string_view>(rows.begin(), rows.size()));
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  return ((bits_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U) != 0;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  std::uint64_t& w = bits_[r * stride_ + c / kWordBits];
  const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
  w = value ? (w | mask) : (w & ~mask);
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) {
  bits_[r * stride_ + c / kWordBits] ^= std::uint64_t{1} << (c % kWordBits);
}

std::span<const std::uint64_t> Gf2Matrix::row_words(std::size_t r) const {
  return {bits_.data() + r * stride_, stride_};
}

std::span<std::uint64_t> Gf2Matrix::row_words(std::size_t r) { return {bits_.data() + r * stride_, stride_}; }

void Gf2Matrix::add_row(std::size_t r, std::size_t s) {
  simd::active_kernels().xor_words(bits_.data() + r * stride_, bits_.data() + s * stride_, stride_);
}

void Gf2Matrix::swap_rows(std::size_t r, std::size_t s) {
  if (r == s) return;
  std::swap_ranges(bits_.begin() + static_cast<std::ptrdiff_t>(r * stride_),
                   bits_.begin() + static_cast<std::ptrdiff_t>((r + 1) * stride_),
                   bits_.begin() + static_cast<std::ptrdiff_t>(s * stride_));
}

void Gf2Matrix::set_labels(std::vector<std::string> row_labels, std::vector<std::string> col_labels) {
  check_labels(row_labels, rows_, "row");
  check_labels(col_labels, cols_, "column");
  row_labels_ = std::move(row_labels);
  col_labels_ = std::move(col_labels);
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  return t;
}

bool Gf2Matrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::string Gf2Matrix::to_string() const {
  std::string out;
  out.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Gf2Matrix out(a.rows(), b.cols());
  const auto& k = simd::active_kernels();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::uint64_t* dst = out.bits_.data() + r * out.stride_;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.get(r, j)) k.xor_words(dst, b.bits_.data() + j * b.stride_, b.stride_);
    }
  }
  if (!a.row_labels_.empty()) out.row_labels_ = a.row_labels_;
  if (!b.col_labels_.empty()) out.col_labels_ = b.col_labels_;
  return out;
}

std::size_t gf2_rank(const Gf2Matrix& m) {
  Gf2Matrix work = m;
  return echelon_pivots(work).size();
}

std::optional<Gf2Matrix> gf2_right_inverse(const Gf2Matrix& m) {
  const std::size_t rows = m.rows();
  Gf2Matrix a = m;
  Gf2Matrix e = Gf2Matrix::identity(rows);
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && !a.get(p, c)) ++p;
    if (p == rows) continue;
    a.swap_rows(p, rank);
    e.swap_rows(p, rank);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != rank && a.get(i, c)) {
        a.add_row(i, rank);
        e.add_row(i, rank);
      }
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank < rows) return std::nullopt;

  // E * M = R with R in reduced echelon form; placing row i of E at the pivot
  // column of row i gives R * N = E, hence M * N = E^-1 * E = Id.
  Gf2Matrix n(m.cols(), rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto src = e.row_words(i);
    auto dst = n.row_words(pivot_col[i]);
    std::copy(src.begin(), src.end(), dst.begin());
  }
  if (!m.row_labels().empty() || !m.col_labels().empty()) n.set_labels(m.col_labels(), m.row_labels());
  return n;
}

std::vector<std::size_t> gf2_independent_columns(const Gf2Matrix& m, std::span<const std::size_t> order) {
  Gf2Matrix permuted(m.rows(), order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (order[j] >= m.cols()) throw DimensionMismatch("column index out of range");
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m.get(r, order[j])) permuted.set(r, j, true);
    }
  }
  std::vector<std::size_t> kept;
  for (std::size_t p : echelon_pivots(permuted)) kept.push_back(order[p]);
  return kept;
}

std::vector<std::size_t> gf2_independent_columns(const Gf2Matrix& m) {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return gf2_independent_columns(m, order);
}

std::vector<std::size_t> gf2_independent_rows(const Gf2Matrix& m) {
  return gf2_independent_columns(m.transpose());
}

}  // namespace pauliflow
