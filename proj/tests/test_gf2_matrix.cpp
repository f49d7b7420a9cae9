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


#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "pauliflow/gf2_matrix.hpp"
#include "pauliflow/error.hpp"
#include "pauliflow/random.hpp"

namespace pauliflow {
namespace {

Gf2Matrix random_matrix(std::size_t r, std::size_t c, Rng& rng, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  Gf2Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, bit(rng));
  }
  return m;
}

// Rank as log2 of the size of the row span, by enumerating all row subsets.
std::size_t span_rank(const Gf2Matrix& m) {
  std::set<std::vector<bool>> span;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m.rows()); ++s) {
    std::vector<bool> v(m.cols(), false);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (((s >> i) & 1U) == 0) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) v[j] = v[j] != m.get(i, j);
    }
    span.insert(v);
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

Gf2Matrix naive_product(const Gf2Matrix& a, const Gf2Matrix& b) {
  Gf2Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool x = false;
      for (std::size_t t = 0; t < a.cols(); ++t) x = x != (a.get(i, t) && b.get(t, j));
      c.set(i, j, x);
    }
  }
  return c;
}

Gf2Matrix column_subset(const Gf2Matrix& m, const std::vector<std::size_t>& cols) {
  Gf2Matrix s(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) s.set(i, j, m.get(i, cols[j]));
  }
  return s;
}

TEST(Gf2Matrix, FromStringsAndToString) {
  const auto m = Gf2Matrix::from_strings({"101", "010"});
  EXPECT_EQ(m.rows(), 2U);
  EXPECT_EQ(m.cols(), 3U);
  EXPECT_TRUE(m.get(0, 0));
  EXPECT_FALSE(m.get(0, 1));
  EXPECT_EQ(m.to_string(), "101\n010\n");
  EXPECT_THROW((void)Gf2Matrix::from_strings({"10", "1"}), DimensionMismatch);
}

TEST(Gf2Matrix, LabelsAreBookkeepingOnly) {
  auto a = Gf2Matrix::from_strings({"10", "01"});
  auto b = a;
  b.set_labels({"x", "y"}, {"p", "q"});
  EXPECT_EQ(a, b);
  EXPECT_THROW(b.set_labels({"x"}, {}), Error);
  EXPECT_THROW(b.set_labels({"x", "x"}, {}), Error);
}

TEST(Gf2Matrix, RankMatchesSpanEnumeration) {
  Rng rng(11);
  for (int t = 0; t < 400; ++t) {
    const std::size_t r = 1 + rng() % 9;
    const std::size_t c = 1 + rng() % 9;
    const double density = (t % 4 == 0) ? 0.15 : 0.5;
    const auto m = random_matrix(r, c, rng, density);
    ASSERT_EQ(gf2_rank(m), span_rank(m)) << m.to_string();
  }
}

TEST(Gf2Matrix, ProductMatchesNaive) {
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = 1 + rng() % 70;
    const std::size_t k = 1 + rng() % 140;
    const std::size_t c = 1 + rng() % 130;
    const auto a = random_matrix(r, k, rng);
    const auto b = random_matrix(k, c, rng);
    ASSERT_EQ(a * b, naive_product(a, b));
  }
  EXPECT_THROW((void)(Gf2Matrix(2, 3) * Gf2Matrix(2, 3)), DimensionMismatch);
}

TEST(Gf2Matrix, TransposePreservesRankOnWideMatrices) {
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    const auto m = random_matrix(1 + rng() % 150, 1 + rng() % 150, rng, 0.1);
    const auto tr = m.transpose();
    ASSERT_EQ(tr.transpose(), m);
    ASSERT_EQ(gf2_rank(m), gf2_rank(tr));
  }
}

TEST(Gf2Matrix, RightInverseExistsExactlyAtFullRowRank) {
  Rng rng(14);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + rng() % 80;
    const std::size_t c = r + rng() % 20;
    const auto m = random_matrix(r, c, rng, t % 3 == 0 ? 0.05 : 0.5);
    const auto n = gf2_right_inverse(m);
    ASSERT_EQ(n.has_value(), gf2_rank(m) == r);
    if (n) {
      ASSERT_EQ(n->rows(), c);
      ASSERT_EQ(n->cols(), r);
      ASSERT_EQ(naive_product(m, *n), Gf2Matrix::identity(r));
    }
  }
  EXPECT_TRUE(gf2_right_inverse(Gf2Matrix(0, 3)).has_value());
  EXPECT_FALSE(gf2_right_inverse(Gf2Matrix::from_strings({"11", "11"})).has_value());
}

TEST(Gf2Matrix, IndependentColumnsFollowVisitingOrder) {
  const auto m = Gf2Matrix::from_strings({"1101", "0111"});
  EXPECT_EQ(gf2_independent_columns(m), (std::vector<std::size_t>{0, 1}));
  const std::vector<std::size_t> order{3, 2, 1, 0};
  EXPECT_EQ(gf2_independent_columns(m, order), (std::vector<std::size_t>{3, 2}));
  EXPECT_EQ(gf2_independent_rows(Gf2Matrix::from_strings({"00", "11", "11", "10"})),
            (std::vector<std::size_t>{1, 3}));

  Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_matrix(1 + rng() % 8, 1 + rng() % 12, rng, 0.3);
    std::vector<std::size_t> perm(m.cols());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto cols = gf2_independent_columns(m, perm);
    ASSERT_EQ(cols.size(), gf2_rank(m));
    ASSERT_EQ(span_rank(column_subset(m, cols).transpose()), cols.size());
    // greedy: each skipped column depends on the kept columns visited before it
    std::vector<std::size_t> kept;
    for (std::size_t j : perm) {
      auto with = kept;
      with.push_back(j);
      const bool independent = gf2_rank(column_subset(m, with)) == with.size();
      ASSERT_EQ(independent, std::find(cols.begin(), cols.end(), j) != cols.end());
      if (independent) kept.push_back(j);
    }
    const auto rows = gf2_independent_rows(m);
    ASSERT_EQ(rows.size(), gf2_rank(m));
  }
}

}  // namespace
}  // namespace pauliflow
