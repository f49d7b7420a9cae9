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

// Inner-loop kernels for GF(2) and GF(2^k) elimination.
//
// Every kernel has a portable scalar reference implementation. On x86-64 an
// AVX2 + PCLMULQDQ variant is compiled into a separate translation unit and
// selected at runtime when the CPU advertises both extensions. The variants
// must agree bit for bit; tests/test_kernels.cpp checks this.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace pauliflow {

/// An element of GF(2^k), k <= 128, as a polynomial over GF(2) in bit form.
/// Bit i of (hi:lo) is the coefficient of x^i.
struct alignas(16) FieldElement {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint64_t low, std::uint64_t high = 0) : lo(low), hi(high) {}

  [[nodiscard]] constexpr bool is_zero() const { return (lo | hi) == 0; }
  [[nodiscard]] static constexpr FieldElement one() { return FieldElement(1); }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr FieldElement operator^(FieldElement a, FieldElement b) {
    return FieldElement(a.lo ^ b.lo, a.hi ^ b.hi);
  }
};

namespace simd {

/// Reduction modulus x^k + tail. The table of moduli keeps deg(tail) < 64 so
/// that folding the overflow back costs one 64-bit carry-less product per word.
struct Reduction {
  unsigned k = 1;
  std::uint64_t tail = 1;
};

/// 128-bit carry-less product of two 64-bit words.
struct Clmul128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

struct KernelTable {
  std::string_view name;
  /// dst[i] ^= src[i] for i < n.
  void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
  Clmul128 (*clmul64)(std::uint64_t a, std::uint64_t b);
  /// a * b mod (x^k + tail); inputs must already be reduced.
  FieldElement (*mul)(const Reduction& red, FieldElement a, FieldElement b);
  /// dst[i] += c * src[i] over GF(2^k) for i < n.
  void (*axpy)(const Reduction& red, FieldElement c, const FieldElement* src, FieldElement* dst,
               std::size_t n);
};

const KernelTable& scalar_kernels();

/// AVX2 + PCLMULQDQ variant, or nullptr when it was not compiled in or the
/// running CPU lacks the extensions.
const KernelTable* avx2_kernels();

/// The table used by the library: the fastest supported variant, unless the
/// environment variable PAULIFLOW_KERNELS=scalar forces the reference code.
const KernelTable& active_kernels();

}  // namespace simd
}  // namespace pauliflow
