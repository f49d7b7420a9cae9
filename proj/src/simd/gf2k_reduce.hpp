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

// Shared multiply-and-reduce skeleton, parameterised on the 64x64 carry-less
// product. Included by each kernel translation unit; everything lives in an
// anonymous namespace so that units compiled with different target flags never
// share an out-of-line definition.

#pragma once

#include <cstdint>

#include "pauliflow/simd/kernels.hpp"

namespace pauliflow::simd {
namespace {

struct Words256 {
  std::uint64_t w[4] = {0, 0, 0, 0};
};

inline Words256 shift_right(const Words256& v, unsigned s) {
  Words256 out;
  const unsigned word = s / 64;
  const unsigned bit = s % 64;
  for (unsigned i = 0; i + word < 4; ++i) {
    std::uint64_t x = v.w[i + word] >> bit;
    if (bit != 0 && i + word + 1 < 4) x |= v.w[i + word + 1] << (64 - bit);
    out.w[i] = x;
  }
  return out;
}

inline void keep_low_bits(Words256& v, unsigned k) {
  for (unsigned i = 0; i < 4; ++i) {
    const unsigned lo_bit = i * 64;
    if (lo_bit >= k) {
      v.w[i] = 0;
    } else if (k - lo_bit < 64) {
      v.w[i] &= (std::uint64_t{1} << (k - lo_bit)) - 1;
    }
  }
}

template <class Clmul>
inline FieldElement reduce_product(const Reduction& red, Words256 p, Clmul clmul) {
  for (;;) {
    const Words256 over = shift_right(p, red.k);
    if ((over.w[0] | over.w[1] | over.w[2] | over.w[3]) == 0) break;
    keep_low_bits(p, red.k);
    // over < 2^127 because both factors had degree < k <= 128.
    const Clmul128 f0 = clmul(over.w[0], red.tail);
    const Clmul128 f1 = clmul(over.w[1], red.tail);
    p.w[0] ^= f0.lo;
    p.w[1] ^= f0.hi ^ f1.lo;
    p.w[2] ^= f1.hi;
  }
  return FieldElement(p.w[0], p.w[1]);
}

template <class Clmul>
inline FieldElement mul_small(const Reduction& red, std::uint64_t a, std::uint64_t b, Clmul clmul) {
  // k <= 64: product fits in 128 bits and every fold fits in 128 bits too.
  Clmul128 p = clmul(a, b);
  const std::uint64_t low_mask = red.k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << red.k) - 1;
  for (;;) {
    const std::uint64_t over =
        red.k == 64 ? p.hi : (p.lo >> red.k) | (p.hi << (64 - red.k));
    if (over == 0) break;
    const Clmul128 f = clmul(over, red.tail);
    p.lo = (p.lo & low_mask) ^ f.lo;
    p.hi = f.hi;
  }
  return FieldElement(p.lo, 0);
}

template <class Clmul>
inline FieldElement mul_generic(const Reduction& red, FieldElement a, FieldElement b, Clmul clmul) {
  if (red.k <= 64) return mul_small(red, a.lo, b.lo, clmul);
  const Clmul128 p00 = clmul(a.lo, b.lo);
  const Clmul128 p01 = clmul(a.lo, b.hi);
  const Clmul128 p10 = clmul(a.hi, b.lo);
  const Clmul128 p11 = clmul(a.hi, b.hi);
  Words256 p;
  p.w[0] = p00.lo;
  p.w[1] = p00.hi ^ p01.lo ^ p10.lo;
  p.w[2] = p01.hi ^ p10.hi ^ p11.lo;
  p.w[3] = p11.hi;
  return reduce_product(red, p, clmul);
}

}  // namespace
}  // namespace pauliflow::simd
