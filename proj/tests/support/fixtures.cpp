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


#include "support/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

namespace pauliflow::testing {

namespace {

std::string letter(int i) { return std::string(1, static_cast<char>('a' + i)); }

std::vector<std::string> letters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(letter(i));
  return out;
}

MeasurementLabelling all_x(const OpenGraph& g) {
  MeasurementLabelling l;
  for (std::size_t v : g.non_outputs()) l.set(g.name(v), Label::X);
  return l;
}

}  // namespace

OpenGraph sample() {
  return OpenGraph({"A", "B", "C", "D", "E", "F", "G", "H"},
                   {{"A", "C"}, {"A", "D"}, {"B", "C"}, {"B", "D"}, {"B", "E"},
                    {"C", "G"}, {"C", "H"}, {"D", "G"}, {"D", "H"}, {"E", "F"}},
                   {"A", "B"}, {"F", "G", "H"});
}

MeasurementLabelling sample_all_x() { return all_x(sample()); }

MeasurementLabelling sample_d_z() {
  auto l = sample_all_x();
  l.set("D", Label::Z);
  return l;
}

PauliFlow sample_example_flow() {
  PauliFlow f;
  f.corrections = {{"A", {"C", "E"}}, {"B", {"E"}}, {"C", {"G"}}, {"D", {"D"}}, {"E", {"F"}}};
  f.order = {{"D", "A"}, {"D", "B"}};
  return f;
}

OpenGraph sample_variant() {
  return OpenGraph({"A", "B", "C", "D", "E", "F", "G", "H"},
                   {{"A", "C"}, {"A", "D"}, {"B", "C"}, {"B", "D"}, {"B", "E"},
                    {"C", "G"}, {"C", "H"}, {"D", "G"}, {"E", "F"}},
                   {"A", "B"}, {"F", "G", "H"});
}

OpenGraph xy_graph() {
  return OpenGraph({"R", "S", "T", "U", "V", "W"},
                   {{"R", "U"}, {"R", "V"}, {"S", "U"}, {"S", "W"}, {"T", "U"}},
                   {"R", "S"}, {"V", "W"});
}

MeasurementLabelling xy_labels() {
  return MeasurementLabelling({{"R", Label::XY}, {"S", Label::XY}, {"T", Label::XY}, {"U", Label::X}});
}

Gf2Matrix sample_reduced() {
  return Gf2Matrix::from_strings({"110000", "111000", "000011", "000011", "000100"});
}

Gf2Matrix sample_flow_d_z() {
  return Gf2Matrix::from_strings({"100000", "101000", "000011", "010000", "000100"});
}

Gf2Matrix sample_variant_flow() {
  return Gf2Matrix::from_strings({"110000", "111000", "000011", "000010", "000100"});
}

Gf2Matrix xy_reduced() { return Gf2Matrix::from_strings({"0110", "0101", "0100", "1000"}); }

Gf2Matrix xy_inverse() { return Gf2Matrix::from_strings({"0001", "0010", "1010", "0110"}); }

std::vector<MeasurementLabelling> all_xz_labellings(const OpenGraph& g) {
  std::vector<std::size_t> free;
  MeasurementLabelling base;
  for (std::size_t v : g.non_outputs()) {
    base.set(g.name(v), Label::X);
    if (!g.is_input(v)) free.push_back(v);
  }
  std::vector<MeasurementLabelling> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << free.size()); ++m) {
    MeasurementLabelling l = base;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if ((m >> i) & 1U) l.set(g.name(free[i]), Label::Z);
    }
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<std::vector<std::pair<int, int>>> connected_graph_classes(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  auto index_of = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin());
  };
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::uint64_t> seen;
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    // connectivity by flood fill
    std::vector<bool> reach(static_cast<std::size_t>(n), false);
    reach[0] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (((mask >> e) & 1U) == 0) continue;
        auto [a, b] = pairs[e];
        if (reach[a] != reach[b]) reach[a] = reach[b] = grew = true;
      }
    }
    if (std::find(reach.begin(), reach.end(), false) != reach.end()) continue;
    std::uint64_t canon = mask;
    for (const auto& q : perms) {
      std::uint64_t m2 = 0;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((mask >> e) & 1U) m2 |= std::uint64_t{1} << index_of(q[pairs[e].first], q[pairs[e].second]);
      }
      canon = std::min(canon, m2);
    }
    if (!seen.insert(canon).second) continue;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((canon >> e) & 1U) edges.push_back(pairs[e]);
    }
    out.push_back(std::move(edges));
  }
  return out;
}

std::vector<Instance> small_family(int max_n) {
  std::vector<Instance> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto classes = connected_graph_classes(n);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::vector<Edge> edges;
      for (auto [a, b] : classes[c]) edges.emplace_back(letter(a), letter(b));
      int total = 1;
      for (int i = 0; i < n; ++i) total *= 3;
      for (int code = 0; code < total; ++code) {
        VertexSet in;
        VertexSet outs;
        std::string io;
        for (int i = 0, x = code; i < n; ++i, x /= 3) {
          if (x % 3 == 1) in.insert(letter(i));
          if (x % 3 == 2) outs.insert(letter(i));
          io += "-io"[x % 3];
        }
        out.push_back({OpenGraph(letters(n), edges, in, outs),
                       "n" + std::to_string(n) + "c" + std::to_string(c) + ":" + io});
      }
    }
  }
  return out;
}

OpenGraph random_open_graph(int n, double edge_prob, double io_prob, Rng& rng) {
  std::bernoulli_distribution edge(edge_prob);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge(rng)) edges.emplace_back(letter(i), letter(j));
    }
  }
  VertexSet in;
  VertexSet outs;
  for (int i = 0; i < n; ++i) {
    const double x = u(rng);
    if (x < io_prob) {
      in.insert(letter(i));
    } else if (x < 2 * io_prob) {
      outs.insert(letter(i));
    }
  }
  return OpenGraph(letters(n), edges, in, outs);
}

std::vector<Instance> random_family(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 6 + static_cast<int>(i % 2);
    out.push_back({random_open_graph(n, 0.45, 0.25, rng), "rand" + std::to_string(i)});
  }
  return out;
}

std::vector<Instance> criterion_family(std::uint64_t seed) {
  auto out = small_family(5);
  auto more = random_family(500, seed);
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  return out;
}

OpenGraph random_sized_graph(int n, int m, int k, Rng& rng) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "v%03d", i);
    names.emplace_back(buf);
  }
  std::set<std::pair<int, int>> chosen;
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(chosen.size()) < m) {
    int a = pick(rng);
    int b = pick(rng);
    if (a == b) continue;
    chosen.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<Edge> edges;
  for (auto [a, b] : chosen) edges.emplace_back(names[static_cast<std::size_t>(a)], names[static_cast<std::size_t>(b)]);
  VertexSet in;
  VertexSet outs;
  for (int i = 0; i < k; ++i) {
    in.insert(names[static_cast<std::size_t>(i)]);
    outs.insert(names[static_cast<std::size_t>(n - 1 - i)]);
  }
  return OpenGraph(names, edges, in, outs);
}

namespace {

double binomial_pmf(long n, long x, double q) {
  return std::exp(std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(x) + 1) -
                  std::lgamma(static_cast<double>(n - x) + 1) + static_cast<double>(x) * std::log(q) +
                  static_cast<double>(n - x) * std::log1p(-q));
}

}  // namespace

long binomial_upper_quantile(long n, double q, double alpha) {
  double cdf = 0;
  for (long x = 0; x <= n; ++x) {
    cdf += binomial_pmf(n, x, q);
    if (cdf >= 1 - alpha) return x;
  }
  return n;
}

long binomial_lower_threshold(long n, double q, double alpha) {
  double cdf = 0;
  long x = 0;
  while (x <= n && cdf + binomial_pmf(n, x, q) <= alpha) cdf += binomial_pmf(n, x++, q);
  return x;
}

}  // namespace pauliflow::testing
