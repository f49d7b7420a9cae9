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

#include "pauliflow/oracle.hpp"

#include <bit>
#include <cstdint>

#include "pauliflow/error.hpp"

namespace pauliflow {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t v) { return Mask{1} << v; }

struct Core {
  std::size_t n = 0;
  std::vector<Mask> adj;
  Mask non_outputs = 0;
  std::vector<std::size_t> rows;
  // Every S subset of the non-inputs with Odd(S), S increasing.
  std::vector<std::pair<Mask, Mask>> subsets;
};

Core make_core(const OpenGraph& g, const OracleLimits& lim) {
  const auto rows = g.non_outputs();
  const auto cols = g.non_inputs();
  if (g.size() > 64) throw LimitExceeded("exhaustive search supports at most 64 vertices");
  if (rows.size() > lim.max_non_outputs) {
    throw LimitExceeded(std::to_string(rows.size()) + " non-outputs exceed the limit of " +
                        std::to_string(lim.max_non_outputs));
  }
  if (cols.size() > lim.max_non_inputs) {
    throw LimitExceeded(std::to_string(cols.size()) + " non-inputs exceed the limit of " +
                        std::to_string(lim.max_non_inputs));
  }
  Core c;
  c.n = g.size();
  c.rows = rows;
  c.adj.assign(c.n, 0);
  for (auto [u, v] : g.edges()) {
    c.adj[u] |= bit(v);
    c.adj[v] |= bit(u);
  }
  for (std::size_t v : rows) c.non_outputs |= bit(v);
  Mask cols_mask = 0;
  for (std::size_t v : cols) cols_mask |= bit(v);
  // Submasks of cols_mask in increasing order.
  Mask s = 0;
  do {
    Mask odd = 0;
    for (Mask t = s; t != 0; t &= t - 1) odd ^= c.adj[static_cast<std::size_t>(std::countr_zero(t))];
    c.subsets.emplace_back(s, odd);
    s = (s - cols_mask) & cols_mask;
  } while (s != 0);
  return c;
}

bool locally_admissible(Label l, bool in_c, bool in_odd) {
  switch (l) {
    case Label::XY:
      return !in_c && in_odd;
    case Label::XZ:
      return in_c && in_odd;
    case Label::YZ:
      return in_c && !in_odd;
    case Label::X:
      return in_odd;
    case Label::Z:
      return in_c;
    case Label::Y:
      return in_c != in_odd;
  }
  return false;
}

// Chosen correction set per vertex, or nullopt if no flow exists.
std::optional<std::vector<Mask>> layered_search(const Core& core, const std::vector<Label>& lab,
                                                const OracleLimits& lim) {
  Mask p1 = 0;  // P1 forces u < v for v in c(u) labelled outside {X, Y}
  Mask p2 = 0;  // P2 forces u < v for v in Odd(c(u)) labelled outside {Y, Z}
  Mask y = 0;
  for (std::size_t v : core.rows) {
    if (lab[v] != Label::X && lab[v] != Label::Y) p1 |= bit(v);
    if (lab[v] != Label::Y && lab[v] != Label::Z) p2 |= bit(v);
    if (lab[v] == Label::Y) y |= bit(v);
  }

  // Forced successor sets of the admissible candidates, per vertex.
  std::vector<std::vector<std::pair<Mask, Mask>>> cand(core.n);
  for (std::size_t u : core.rows) {
    const Mask others = core.non_outputs & ~bit(u);
    for (const auto& [s, odd] : core.subsets) {
      if (!locally_admissible(lab[u], (s & bit(u)) != 0, (odd & bit(u)) != 0)) continue;
      const Mask forced = ((s & p1) | (odd & p2) | ((s ^ odd) & y)) & others;
      cand[u].emplace_back(s, forced);
    }
    if (cand[u].empty()) return std::nullopt;
    if (cand[u].size() > lim.max_candidates_per_vertex) {
      throw LimitExceeded("more than " + std::to_string(lim.max_candidates_per_vertex) + " candidates for a vertex");
    }
  }

  std::vector<Mask> choice(core.n, 0);
  Mask placed = 0;
  Mask remaining = core.non_outputs;
  while (remaining != 0) {
    Mask layer = 0;
    for (Mask t = remaining; t != 0; t &= t - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(t));
      for (const auto& [s, forced] : cand[u]) {
        if ((forced & ~placed) == 0) {
          choice[u] = s;
          layer |= bit(u);
          break;
        }
      }
    }
    if (layer == 0) return std::nullopt;
    placed |= layer;
    remaining &= ~layer;
  }
  return choice;
}

PauliFlow to_flow(const OpenGraph& g, const MeasurementLabelling& labels, const Core& core,
                  const std::vector<Mask>& choice) {
  CorrectionMap c;
  for (std::size_t u : core.rows) {
    VertexSet set;
    for (Mask t = choice[u]; t != 0; t &= t - 1) set.insert(g.name(static_cast<std::size_t>(std::countr_zero(t))));
    c.emplace(g.name(u), std::move(set));
  }
  auto f = infer_forced_order(g, labels, c);
  if (!f) throw Error("oracle witness has a cyclic forced order");
  return *f;
}

}  // namespace

std::optional<PauliFlow> brute_force_flow(const OpenGraph& g, const MeasurementLabelling& labels,
                                          const OracleLimits& lim) {
  validate_labelling(g, labels, true);
  const Core core = make_core(g, lim);
  std::vector<Label> lab(g.size(), Label::X);
  for (const auto& [v, l] : labels.entries()) lab[g.index_of(v)] = l;
  const auto choice = layered_search(core, lab, lim);
  if (!choice) return std::nullopt;
  return to_flow(g, labels, core, *choice);
}

std::optional<std::pair<MeasurementLabelling, PauliFlow>> brute_force_label_search(const OpenGraph& g,
                                                                                   const std::set<Label>& alphabet,
                                                                                   const OracleLimits& lim) {
  return brute_force_label_search(g, alphabet, lim, {});
}

std::optional<std::pair<MeasurementLabelling, PauliFlow>> brute_force_label_search(const OpenGraph& g,
                                                                                   const std::set<Label>& alphabet,
                                                                                   const OracleLimits& lim,
                                                                                   const MeasurementLabelling& fixed) {
  validate_labelling(g, fixed, false);
  for (Label l : alphabet) {
    if (l != Label::X && l != Label::Y && l != Label::Z) {
      throw GraphError("label search alphabet must be a subset of {X, Y, Z}");
    }
  }
  const Core core = make_core(g, lim);
  bool exact = alphabet.count(Label::Y) == 0;
  for (const auto& [v, l] : fixed.entries()) exact = exact && (l == Label::X || l == Label::Z);

  std::vector<std::vector<Label>> options;
  for (std::size_t v : core.rows) {
    std::vector<Label> opts;
    if (auto l = fixed.get(g.name(v))) {
      opts.push_back(*l);
    } else {
      for (Label l : alphabet) {
        if (!g.is_input(v) || l != Label::Z) opts.push_back(l);
      }
    }
    if (opts.empty()) return std::nullopt;
    options.push_back(std::move(opts));
  }

  std::vector<std::size_t> digit(core.rows.size(), 0);
  std::vector<Label> lab(g.size(), Label::X);
  for (;;) {
    MeasurementLabelling labels;
    for (std::size_t i = 0; i < core.rows.size(); ++i) lab[core.rows[i]] = options[i][digit[i]];
    if (exact) {
      for (std::size_t v : core.rows) labels.set(g.name(v), lab[v]);
      if (auto f = extract_flow(g, labels)) return std::make_pair(labels, *f);
    } else if (auto choice = layered_search(core, lab, lim)) {
      for (std::size_t v : core.rows) labels.set(g.name(v), lab[v]);
      return std::make_pair(labels, to_flow(g, labels, core, *choice));
    }
    // Odometer step, last vertex fastest.
    std::size_t i = digit.size();
    while (i > 0 && ++digit[i - 1] == options[i - 1].size()) digit[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

std::vector<std::vector<bool>> gf2_kernel(const Gf2Matrix& m) {
  Gf2Matrix a = m;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && !a.get(p, c)) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, rank);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != rank && a.get(i, c)) a.add_row(i, rank);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<bool>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<bool> x(a.cols(), false);
    x[f] = true;
    for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = a.get(i, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Gf2Matrix> all_right_inverses(const Gf2Matrix& m, std::size_t cap) {
  const auto n0 = gf2_right_inverse(m);
  if (!n0) return {};
  const auto kernel = gf2_kernel(m);
  const std::size_t free_bits = kernel.size() * m.rows();
  if (free_bits >= 63 || (std::uint64_t{1} << free_bits) > cap) {
    throw LimitExceeded("more than " + std::to_string(cap) + " right inverses");
  }
  std::vector<Gf2Matrix> out;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << free_bits); ++t) {
    Gf2Matrix n = *n0;
    for (std::size_t j = 0; j < m.rows(); ++j) {
      for (std::size_t k = 0; k < kernel.size(); ++k) {
        if (((t >> (j * kernel.size() + k)) & 1U) == 0) continue;
        for (std::size_t i = 0; i < m.cols(); ++i) {
          if (kernel[k][i]) n.flip(i, j);
        }
      }
    }
    out.push_back(std::move(n));
  }
  return out;
}

}  // namespace pauliflow
