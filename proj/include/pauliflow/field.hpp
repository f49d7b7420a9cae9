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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pauliflow/gf2_matrix.hpp"
#include "pauliflow/random.hpp"
#include "pauliflow/simd/kernels.hpp"

namespace pauliflow {

inline constexpr unsigned kMaxFieldDegree = 128;

/// A polynomial over GF(2) of degree <= 128, bit i = coefficient of x^i.
using Gf2Poly = std::array<std::uint64_t, 3>;

/// GF(2^k) = GF(2)[x] / f for the tabulated irreducible f of degree k.
class FieldContext {
 public:
  /// Throws FieldError unless 1 <= k <= 128. The tabulated modulus is checked
  /// for irreducibility on every construction.
  explicit FieldContext(unsigned k);

  [[nodiscard]] unsigned degree() const { return red_.k; }
  [[nodiscard]] Gf2Poly reduction_poly() const;
  [[nodiscard]] const simd::Reduction& reduction() const { return red_; }

  [[nodiscard]] bool contains(FieldElement a) const;

  [[nodiscard]] static FieldElement zero() { return FieldElement(); }
  [[nodiscard]] static FieldElement one() { return FieldElement::one(); }
  [[nodiscard]] static FieldElement add(FieldElement a, FieldElement b) { return a ^ b; }
  [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const {
    return simd::active_kernels().mul(red_, a, b);
  }
  /// a^(2^k - 2). Throws DivisionByZero for a = 0.
  [[nodiscard]] FieldElement inv(FieldElement a) const;

  /// Uniform element built from k independent random bits.
  [[nodiscard]] FieldElement random(Rng& rng) const;

  friend bool operator==(const FieldContext& a, const FieldContext& b) { return a.red_.k == b.red_.k; }

 private:
  simd::Reduction red_;
};

FieldContext field_ctx(unsigned k);

/// Checked arithmetic: operands must belong to ctx (no bits at positions >= k).
FieldElement field_add(const FieldContext& ctx, FieldElement a, FieldElement b);
FieldElement field_mul(const FieldContext& ctx, FieldElement a, FieldElement b);
FieldElement field_inv(const FieldContext& ctx, FieldElement a);

/// Rabin's test: f of degree k is irreducible iff x^(2^k) = x mod f and
/// gcd(x^(2^(k/q)) - x, f) = 1 for every prime q dividing k.
bool is_irreducible(const Gf2Poly& f);

/// Tabulated modulus x^k + tail for 1 <= k <= 128 (deg tail < 64).
std::uint64_t reduction_tail(unsigned k);

/// Dense row-major matrix over GF(2^k).
class FieldMatrix {
 public:
  FieldMatrix(FieldContext ctx, std::size_t rows, std::size_t cols);

  /// 0/1 matrix embedded through the prime subfield.
  static FieldMatrix lift(const Gf2Matrix& m, FieldContext ctx);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const FieldContext& ctx() const { return ctx_; }

  [[nodiscard]] FieldElement at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Throws FieldError if v does not belong to ctx().
  void set(std::size_t r, std::size_t c, FieldElement v);

  [[nodiscard]] std::span<FieldElement> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<const FieldElement> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.ctx_ == b.ctx_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  FieldContext ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
};

/// Row rank over GF(2^k). Pivots are the first nonzero entry at or below the
/// current row.
std::size_t field_rank(const FieldMatrix& m);

}  // namespace pauliflow
