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

#include "gf2k_reduce.hpp"
#include "pauliflow/simd/kernels.hpp"

namespace pauliflow::simd {
namespace {

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

Clmul128 clmul64_scalar(std::uint64_t a, std::uint64_t b) {
  Clmul128 r;
  for (unsigned i = 0; i < 64; ++i) {
    if (((b >> i) & 1) == 0) continue;
    r.lo ^= a << i;
    if (i != 0) r.hi ^= a >> (64 - i);
  }
  return r;
}

FieldElement mul_scalar(const Reduction& red, FieldElement a, FieldElement b) {
  return mul_generic(red, a, b, clmul64_scalar);
}

void axpy_scalar(const Reduction& red, FieldElement c, const FieldElement* src, FieldElement* dst,
                 std::size_t n) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < n; ++i) {
    if (src[i].is_zero()) continue;
    dst[i] = dst[i] ^ mul_scalar(red, c, src[i]);
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", xor_words_scalar, clmul64_scalar, mul_scalar, axpy_scalar};
  return table;
}

}  // namespace pauliflow::simd
