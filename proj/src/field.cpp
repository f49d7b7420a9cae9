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

#include "pauliflow/field.hpp"

#include <bit>
#include <string>

#include "pauliflow/error.hpp"

namespace pauliflow {

namespace {

// Low-weight irreducible moduli x^k + tail, index k - 1. Trinomials with the
// smallest middle exponent where one exists, otherwise the pentanomial with
// lexicographically smallest (a, b, c).
constexpr std::uint64_t kReductionTails[kMaxFieldDegree] = {
    0x1ULL,  // x^1 + 1
    0x3ULL,  // x^2 + x + 1
    0x3ULL,  // x^3 + x + 1
    0x3ULL,  // x^4 + x + 1
    0x5ULL,  // x^5 + x^2 + 1
    0x3ULL,  // x^6 + x + 1
    0x3ULL,  // x^7 + x + 1
    0x1bULL,  // x^8 + x^4 + x^3 + x + 1
    0x3ULL,  // x^9 + x + 1
    0x9ULL,  // x^10 + x^3 + 1
    0x5ULL,  // x^11 + x^2 + 1
    0x9ULL,  // x^12 + x^3 + 1
    0x1bULL,  // x^13 + x^4 + x^3 + x + 1
    0x21ULL,  // x^14 + x^5 + 1
    0x3ULL,  // x^15 + x + 1
    0x2bULL,  // x^16 + x^5 + x^3 + x + 1
    0x9ULL,  // x^17 + x^3 + 1
    0x9ULL,  // x^18 + x^3 + 1
    0x27ULL,  // x^19 + x^5 + x^2 + x + 1
    0x9ULL,  // x^20 + x^3 + 1
    0x5ULL,  // x^21 + x^2 + 1
    0x3ULL,  // x^22 + x + 1
    0x21ULL,  // x^23 + x^5 + 1
    0x1bULL,  // x^24 + x^4 + x^3 + x + 1
    0x9ULL,  // x^25 + x^3 + 1
    0x1bULL,  // x^26 + x^4 + x^3 + x + 1
    0x27ULL,  // x^27 + x^5 + x^2 + x + 1
    0x3ULL,  // x^28 + x + 1
    0x5ULL,  // x^29 + x^2 + 1
    0x3ULL,  // x^30 + x + 1
    0x9ULL,  // x^31 + x^3 + 1
    0x8dULL,  // x^32 + x^7 + x^3 + x^2 + 1
    0x401ULL,  // x^33 + x^10 + 1
    0x81ULL,  // x^34 + x^7 + 1
    0x5ULL,  // x^35 + x^2 + 1
    0x201ULL,  // x^36 + x^9 + 1
    0x53ULL,  // x^37 + x^6 + x^4 + x + 1
    0x63ULL,  // x^38 + x^6 + x^5 + x + 1
    0x11ULL,  // x^39 + x^4 + 1
    0x39ULL,  // x^40 + x^5 + x^4 + x^3 + 1
    0x9ULL,  // x^41 + x^3 + 1
    0x81ULL,  // x^42 + x^7 + 1
    0x59ULL,  // x^43 + x^6 + x^4 + x^3 + 1
    0x21ULL,  // x^44 + x^5 + 1
    0x1bULL,  // x^45 + x^4 + x^3 + x + 1
    0x3ULL,  // x^46 + x + 1
    0x21ULL,  // x^47 + x^5 + 1
    0x2dULL,  // x^48 + x^5 + x^3 + x^2 + 1
    0x201ULL,  // x^49 + x^9 + 1
    0x1dULL,  // x^50 + x^4 + x^3 + x^2 + 1
    0x4bULL,  // x^51 + x^6 + x^3 + x + 1
    0x9ULL,  // x^52 + x^3 + 1
    0x47ULL,  // x^53 + x^6 + x^2 + x + 1
    0x201ULL,  // x^54 + x^9 + 1
    0x81ULL,  // x^55 + x^7 + 1
    0x95ULL,  // x^56 + x^7 + x^4 + x^2 + 1
    0x11ULL,  // x^57 + x^4 + 1
    0x80001ULL,  // x^58 + x^19 + 1
    0x95ULL,  // x^59 + x^7 + x^4 + x^2 + 1
    0x3ULL,  // x^60 + x + 1
    0x27ULL,  // x^61 + x^5 + x^2 + x + 1
    0x20000001ULL,  // x^62 + x^29 + 1
    0x3ULL,  // x^63 + x + 1
    0x1bULL,  // x^64 + x^4 + x^3 + x + 1
    0x40001ULL,  // x^65 + x^18 + 1
    0x9ULL,  // x^66 + x^3 + 1
    0x27ULL,  // x^67 + x^5 + x^2 + x + 1
    0x201ULL,  // x^68 + x^9 + 1
    0x65ULL,  // x^69 + x^6 + x^5 + x^2 + 1
    0x2bULL,  // x^70 + x^5 + x^3 + x + 1
    0x41ULL,  // x^71 + x^6 + 1
    0x609ULL,  // x^72 + x^10 + x^9 + x^3 + 1
    0x2000001ULL,  // x^73 + x^25 + 1
    0x800000001ULL,  // x^74 + x^35 + 1
    0x4bULL,  // x^75 + x^6 + x^3 + x + 1
    0x200001ULL,  // x^76 + x^21 + 1
    0x65ULL,  // x^77 + x^6 + x^5 + x^2 + 1
    0x69ULL,  // x^78 + x^6 + x^5 + x^3 + 1
    0x201ULL,  // x^79 + x^9 + 1
    0x215ULL,  // x^80 + x^9 + x^4 + x^2 + 1
    0x11ULL,  // x^81 + x^4 + 1
    0x10bULL,  // x^82 + x^8 + x^3 + x + 1
    0x95ULL,  // x^83 + x^7 + x^4 + x^2 + 1
    0x21ULL,  // x^84 + x^5 + 1
    0x107ULL,  // x^85 + x^8 + x^2 + x + 1
    0x200001ULL,  // x^86 + x^21 + 1
    0x2001ULL,  // x^87 + x^13 + 1
    0xc5ULL,  // x^88 + x^7 + x^6 + x^2 + 1
    0x4000000001ULL,  // x^89 + x^38 + 1
    0x8000001ULL,  // x^90 + x^27 + 1
    0x123ULL,  // x^91 + x^8 + x^5 + x + 1
    0x200001ULL,  // x^92 + x^21 + 1
    0x5ULL,  // x^93 + x^2 + 1
    0x200001ULL,  // x^94 + x^21 + 1
    0x801ULL,  // x^95 + x^11 + 1
    0x641ULL,  // x^96 + x^10 + x^9 + x^6 + 1
    0x41ULL,  // x^97 + x^6 + 1
    0x801ULL,  // x^98 + x^11 + 1
    0x4bULL,  // x^99 + x^6 + x^3 + x + 1
    0x8001ULL,  // x^100 + x^15 + 1
    0xc3ULL,  // x^101 + x^7 + x^6 + x + 1
    0x20000001ULL,  // x^102 + x^29 + 1
    0x201ULL,  // x^103 + x^9 + 1
    0x1bULL,  // x^104 + x^4 + x^3 + x + 1
    0x11ULL,  // x^105 + x^4 + 1
    0x8001ULL,  // x^106 + x^15 + 1
    0x291ULL,  // x^107 + x^9 + x^7 + x^4 + 1
    0x20001ULL,  // x^108 + x^17 + 1
    0x35ULL,  // x^109 + x^5 + x^4 + x^2 + 1
    0x200000001ULL,  // x^110 + x^33 + 1
    0x401ULL,  // x^111 + x^10 + 1
    0x39ULL,  // x^112 + x^5 + x^4 + x^3 + 1
    0x201ULL,  // x^113 + x^9 + 1
    0x2dULL,  // x^114 + x^5 + x^3 + x^2 + 1
    0x1a1ULL,  // x^115 + x^8 + x^7 + x^5 + 1
    0x17ULL,  // x^116 + x^4 + x^2 + x + 1
    0x27ULL,  // x^117 + x^5 + x^2 + x + 1
    0x200000001ULL,  // x^118 + x^33 + 1
    0x101ULL,  // x^119 + x^8 + 1
    0x1bULL,  // x^120 + x^4 + x^3 + x + 1
    0x40001ULL,  // x^121 + x^18 + 1
    0x47ULL,  // x^122 + x^6 + x^2 + x + 1
    0x5ULL,  // x^123 + x^2 + 1
    0x80001ULL,  // x^124 + x^19 + 1
    0xe1ULL,  // x^125 + x^7 + x^6 + x^5 + 1
    0x200001ULL,  // x^126 + x^21 + 1
    0x3ULL,  // x^127 + x + 1
    0x87ULL,  // x^128 + x^7 + x^2 + x + 1
};

int degree_of(const Gf2Poly& p) {
  for (int w = 2; w >= 0; --w) {
    if (p[static_cast<std::size_t>(w)] != 0) {
      return w * 64 + 63 - std::countl_zero(p[static_cast<std::size_t>(w)]);
    }
  }
  return -1;
}

bool is_zero_poly(const Gf2Poly& p) { return (p[0] | p[1] | p[2]) == 0; }

Gf2Poly shift_left(const Gf2Poly& p, unsigned s) {
  Gf2Poly out{0, 0, 0};
  const int word = static_cast<int>(s / 64);
  const unsigned bit = s % 64;
  for (int i = 2; i >= word; --i) {
    const auto src = static_cast<std::size_t>(i - word);
    std::uint64_t x = p[src] << bit;
    if (bit != 0 && src >= 1) x |= p[src - 1] >> (64 - bit);
    out[static_cast<std::size_t>(i)] = x;
  }
  return out;
}

void xor_into(Gf2Poly& a, const Gf2Poly& b) {
  for (std::size_t i = 0; i < 3; ++i) a[i] ^= b[i];
}

Gf2Poly poly_mod(Gf2Poly a, const Gf2Poly& f) {
  const int df = degree_of(f);
  for (int da = degree_of(a); da >= df; da = degree_of(a)) {
    xor_into(a, shift_left(f, static_cast<unsigned>(da - df)));
  }
  return a;
}

Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b) {
  while (!is_zero_poly(b)) {
    Gf2Poly r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

// a * b mod f, for a, b already reduced mod f (deg f <= 128).
Gf2Poly poly_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& f) {
  const int df = degree_of(f);
  Gf2Poly acc{0, 0, 0};
  for (int i = degree_of(b); i >= 0; --i) {
    acc = shift_left(acc, 1);
    if (degree_of(acc) == df) xor_into(acc, f);
    if ((b[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1U) xor_into(acc, a);
  }
  return acc;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

void require_member(const FieldContext& ctx, FieldElement a) {
  if (!ctx.contains(a)) {
    throw FieldError("element has bits beyond degree " + std::to_string(ctx.degree()));
  }
}

}  // namespace

std::uint64_t reduction_tail(unsigned k) {
  if (k < 1 || k > kMaxFieldDegree) {
    throw FieldError("extension degree " + std::to_string(k) + " outside [1, 128]");
  }
  return kReductionTails[k - 1];
}

bool is_irreducible(const Gf2Poly& f) {
  const int k = degree_of(f);
  if (k < 1) return false;
  const Gf2Poly x = poly_mod(Gf2Poly{2, 0, 0}, f);
  // powers[i] = x^(2^i) mod f
  std::vector<Gf2Poly> powers{x};
  for (int i = 1; i <= k; ++i) powers.push_back(poly_mulmod(powers.back(), powers.back(), f));
  if (powers[static_cast<std::size_t>(k)] != x) return false;
  for (unsigned q : prime_factors(static_cast<unsigned>(k))) {
    Gf2Poly g = powers[static_cast<std::size_t>(k) / q];
    xor_into(g, x);
    const Gf2Poly d = poly_gcd(f, g);
    if (degree_of(d) != 0) return false;
  }
  return true;
}

FieldContext::FieldContext(unsigned k) {
  red_.k = k;
  red_.tail = reduction_tail(k);
  if (!is_irreducible(reduction_poly())) {
    throw FieldError("tabulated modulus of degree " + std::to_string(k) + " is reducible");
  }
}

Gf2Poly FieldContext::reduction_poly() const {
  Gf2Poly f{red_.tail, 0, 0};
  f[red_.k / 64] |= std::uint64_t{1} << (red_.k % 64);
  return f;
}

bool FieldContext::contains(FieldElement a) const {
  const unsigned k = red_.k;
  if (k >= 128) return true;
  if (k >= 64) return (a.hi >> (k - 64)) == 0;
  return a.hi == 0 && (a.lo >> k) == 0;
}

FieldElement FieldContext::inv(FieldElement a) const {
  if (a.is_zero()) throw DivisionByZero();
  // a^(2^k - 2) = prod_{i=1}^{k-1} a^(2^i)
  FieldElement result = one();
  FieldElement sq = a;
  for (unsigned i = 1; i < red_.k; ++i) {
    sq = mul(sq, sq);
    result = mul(result, sq);
  }
  return result;
}

FieldElement FieldContext::random(Rng& rng) const {
  const unsigned k = red_.k;
  FieldElement e;
  e.lo = rng();
  if (k < 64) e.lo &= (std::uint64_t{1} << k) - 1;
  if (k > 64) {
    e.hi = rng();
    if (k < 128) e.hi &= (std::uint64_t{1} << (k - 64)) - 1;
  }
  return e;
}

FieldContext field_ctx(unsigned k) { return FieldContext(k); }

FieldElement field_add(const FieldContext& ctx, FieldElement a, FieldElement b) {
  require_member(ctx, a);
  require_member(ctx, b);
  return FieldContext::add(a, b);
}

FieldElement field_mul(const FieldContext& ctx, FieldElement a, FieldElement b) {
  require_member(ctx, a);
  require_member(ctx, b);
  return ctx.mul(a, b);
}

FieldElement field_inv(const FieldContext& ctx, FieldElement a) {
  require_member(ctx, a);
  return ctx.inv(a);
}

FieldMatrix::FieldMatrix(FieldContext ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), entries_(rows * cols) {}

FieldMatrix FieldMatrix::lift(const Gf2Matrix& m, FieldContext ctx) {
  FieldMatrix out(ctx, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) out.entries_[r * out.cols_ + c] = FieldElement::one();
    }
  }
  return out;
}

void FieldMatrix::set(std::size_t r, std::size_t c, FieldElement v) {
  require_member(ctx_, v);
  entries_[r * cols_ + c] = v;
}

std::size_t field_rank(const FieldMatrix& m) {
  FieldMatrix a = m;
  const auto& kernels = simd::active_kernels();
  const auto& red = a.ctx().reduction();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a.at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != rank) {
      auto rp = a.row(p);
      auto rr = a.row(rank);
      std::swap_ranges(rp.begin() + static_cast<std::ptrdiff_t>(c), rp.end(),
                       rr.begin() + static_cast<std::ptrdiff_t>(c));
    }
    const FieldElement pivot_inv = a.ctx().inv(a.at(rank, c));
    const FieldElement* pivot_row = a.row(rank).data() + c;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const FieldElement lead = a.at(i, c);
      if (lead.is_zero()) continue;
      const FieldElement factor = a.ctx().mul(lead, pivot_inv);
      kernels.axpy(red, factor, pivot_row, a.row(i).data() + c, cols - c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace pauliflow
