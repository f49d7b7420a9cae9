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

// Built with -mavx2 -mpclmul. Nothing in here may run before the dispatcher
// has confirmed CPU support.

#include "pauliflow/simd/kernels.hpp"

#if defined(PAULIFLOW_HAVE_AVX2)

#include <immintrin.h>

#include "gf2k_reduce.hpp"

namespace pauliflow::simd {
namespace {

void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

inline Clmul128 clmul64_pclmul(std::uint64_t a, std::uint64_t b) {
  const __m128i va = _mm_cvtsi64_si128(static_cast<long long>(a));
  const __m128i vb = _mm_cvtsi64_si128(static_cast<long long>(b));
  const __m128i p = _mm_clmulepi64_si128(va, vb, 0x00);
  Clmul128 r;
  r.lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(p));
  r.hi = static_cast<std::uint64_t>(_mm_extract_epi64(p, 1));
  return r;
}

Clmul128 clmul64_avx2(std::uint64_t a, std::uint64_t b) { return clmul64_pclmul(a, b); }

FieldElement mul_avx2(const Reduction& red, FieldElement a, FieldElement b) {
  return mul_generic(red, a, b, clmul64_pclmul);
}

// k <= 64 row update: the multiplier stays in a register and the reduction
// folds with one more carry-less product per round.
void axpy_small_avx2(const Reduction& red, std::uint64_t c, const FieldElement* src,
                     FieldElement* dst, std::size_t n) {
  const __m128i vc = _mm_cvtsi64_si128(static_cast<long long>(c));
  const __m128i vtail = _mm_cvtsi64_si128(static_cast<long long>(red.tail));
  const unsigned k = red.k;
  const std::uint64_t low_mask = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t s = src[i].lo;
    if (s == 0) continue;
    __m128i p = _mm_clmulepi64_si128(vc, _mm_cvtsi64_si128(static_cast<long long>(s)), 0x00);
    std::uint64_t lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(p));
    std::uint64_t hi = static_cast<std::uint64_t>(_mm_extract_epi64(p, 1));
    for (;;) {
      const std::uint64_t over = k == 64 ? hi : (lo >> k) | (hi << (64 - k));
      if (over == 0) break;
      p = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(over)), vtail, 0x00);
      lo = (lo & low_mask) ^ static_cast<std::uint64_t>(_mm_cvtsi128_si64(p));
      hi = static_cast<std::uint64_t>(_mm_extract_epi64(p, 1));
    }
    dst[i].lo ^= lo;
  }
}

void axpy_avx2(const Reduction& red, FieldElement c, const FieldElement* src, FieldElement* dst,
               std::size_t n) {
  if (c.is_zero()) return;
  if (red.k <= 64) {
    axpy_small_avx2(red, c.lo, src, dst, n);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (src[i].is_zero()) continue;
    dst[i] = dst[i] ^ mul_avx2(red, c, src[i]);
  }
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{"avx2+pclmul", xor_words_avx2, clmul64_avx2, mul_avx2, axpy_avx2};
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("pclmul");
  }();
  return supported ? &table : nullptr;
}

}  // namespace pauliflow::simd

#else

namespace pauliflow::simd {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace pauliflow::simd

#endif
