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

#include "pauliflow/flow.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>

#include "pauliflow/error.hpp"

namespace pauliflow {

namespace {

using Labels = std::vector<std::optional<Label>>;

bool in(Label l, std::initializer_list<Label> set) { return std::find(set.begin(), set.end(), l) != set.end(); }

// Transitive closure in place; false if some vertex reaches itself.
bool close_order(std::vector<VertexMask>& succ) {
  const std::size_t n = succ.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (succ[i].test(k)) succ[i] |= succ[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (succ[i].test(i)) return false;
  }
  return true;
}

std::set<std::pair<std::string, std::string>> order_names(const OpenGraph& g, const std::vector<VertexMask>& succ) {
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t u = 0; u < succ.size(); ++u) {
    for (std::size_t v : succ[u].indices()) out.emplace(g.name(u), g.name(v));
  }
  return out;
}

// c as masks indexed by vertex (empty for outputs), checked against the domain.
std::vector<VertexMask> index_corrections(const OpenGraph& g, const CorrectionMap& c) {
  std::vector<VertexMask> out(g.size(), VertexMask(g.size()));
  std::vector<bool> seen(g.size(), false);
  for (const auto& [name, set] : c) {
    const std::size_t u = g.index_of(name);
    if (g.is_output(u)) throw GraphError("correction set given for output \"" + name + "\"");
    seen[u] = true;
    for (const auto& w : set) {
      const std::size_t x = g.index_of(w);
      if (g.is_input(x)) {
        throw GraphError("correction set of \"" + name + "\" contains input \"" + w + "\"");
      }
      out[u].set(x);
    }
  }
  for (std::size_t u : g.non_outputs()) {
    if (!seen[u]) throw GraphError("no correction set for non-output \"" + g.name(u) + "\"");
  }
  return out;
}

std::vector<VertexMask> index_order(const OpenGraph& g, const PauliFlow& f) {
  std::vector<VertexMask> succ(g.size(), VertexMask(g.size()));
  for (const auto& [a, b] : f.order) {
    const std::size_t u = g.index_of(a);
    const std::size_t v = g.index_of(b);
    if (g.is_output(u) || g.is_output(v)) {
      throw GraphError("order relation \"" + a + "\" < \"" + b + "\" involves an output");
    }
    succ[u].set(v);
  }
  return succ;
}

Labels total_labels(const OpenGraph& g, const MeasurementLabelling& labels) {
  validate_labelling(g, labels, true);
  return labels.by_index(g);
}

void check_pauli(const OpenGraph& g, const Labels& lab, const std::vector<VertexMask>& c,
                 const std::vector<VertexMask>& prec, ViolationList& out) {
  auto add = [&](Condition k, std::size_t u, std::size_t v) { out.push_back({k, g.name(u), g.name(v)}); };
  for (std::size_t u : g.non_outputs()) {
    const VertexMask& cu = c[u];
    const VertexMask odd = odd_neighbourhood(g, cu);
    for (std::size_t v : cu.indices()) {
      if (v != u && !g.is_output(v) && !in(*lab[v], {Label::X, Label::Y}) && !prec[u].test(v)) {
        add(Condition::P1, u, v);
      }
    }
    for (std::size_t v : odd.indices()) {
      if (v != u && !g.is_output(v) && !in(*lab[v], {Label::Y, Label::Z}) && !prec[u].test(v)) {
        add(Condition::P2, u, v);
      }
    }
    for (std::size_t v : g.non_outputs()) {
      if (v != u && *lab[v] == Label::Y && !prec[u].test(v) && cu.test(v) != odd.test(v)) {
        add(Condition::P3, u, v);
      }
    }
    const bool self_c = cu.test(u);
    const bool self_odd = odd.test(u);
    switch (*lab[u]) {
      case Label::XY:
        if (self_c || !self_odd) add(Condition::P4, u, u);
        break;
      case Label::XZ:
        if (!self_c || !self_odd) add(Condition::P5, u, u);
        break;
      case Label::YZ:
        if (!self_c || self_odd) add(Condition::P6, u, u);
        break;
      case Label::X:
        if (!self_odd) add(Condition::P7, u, u);
        break;
      case Label::Z:
        if (!self_c) add(Condition::P8, u, u);
        break;
      case Label::Y:
        if (self_c == self_odd) add(Condition::P9, u, u);
        break;
    }
  }
}

ViolationList verify_indexed(const OpenGraph& g, const Labels& lab, const std::vector<VertexMask>& c,
                             const PauliFlow& f) {
  ViolationList out;
  std::vector<VertexMask> prec = index_order(g, f);
  if (!close_order(prec)) {
    for (std::size_t u = 0; u < g.size(); ++u) {
      if (prec[u].test(u)) out.push_back({Condition::Order, g.name(u), g.name(u)});
    }
  }
  check_pauli(g, lab, c, prec, out);
  return out;
}

VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

// Position of each vertex among the non-outputs (rows) or non-inputs (columns).
std::vector<std::size_t> positions(std::size_t n, const std::vector<std::size_t>& members) {
  std::vector<std::size_t> pos(n, SIZE_MAX);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = i;
  return pos;
}

}  // namespace

std::string_view to_string(Condition c) {
  static constexpr std::array<std::string_view, 15> kNames{"P1", "P2", "P3", "P4", "P5", "P6",    "P7",     "P8",
                                                           "P9", "F1", "F2", "F3", "Order", "Product", "Acyclic"};
  return kNames[static_cast<std::size_t>(c)];
}

ViolationList verify_pauli_flow(const OpenGraph& g, const MeasurementLabelling& labels, const PauliFlow& f) {
  const Labels lab = total_labels(g, labels);
  return verify_indexed(g, lab, index_corrections(g, f.corrections), f);
}

ViolationList verify_focussed(const OpenGraph& g, const MeasurementLabelling& labels, const PauliFlow& f) {
  const Labels lab = total_labels(g, labels);
  const auto c = index_corrections(g, f.corrections);
  ViolationList out = verify_indexed(g, lab, c, f);
  for (std::size_t v : g.non_outputs()) {
    const VertexMask odd = odd_neighbourhood(g, c[v]);
    for (std::size_t w : g.non_outputs()) {
      if (w == v) continue;
      const Label l = *lab[w];
      if (c[v].test(w) && !in(l, {Label::XY, Label::X, Label::Y})) out.push_back({Condition::F1, g.name(v), g.name(w)});
      if (odd.test(w) && !in(l, {Label::XZ, Label::YZ, Label::Y, Label::Z})) {
        out.push_back({Condition::F2, g.name(v), g.name(w)});
      }
      if (l == Label::Y && c[v].test(w) != odd.test(w)) out.push_back({Condition::F3, g.name(v), g.name(w)});
    }
  }
  return out;
}

std::optional<PauliFlow> infer_forced_order(const OpenGraph& g, const MeasurementLabelling& labels,
                                            const CorrectionMap& c) {
  const Labels lab = total_labels(g, labels);
  const auto cm = index_corrections(g, c);
  std::vector<VertexMask> succ(g.size(), VertexMask(g.size()));
  for (std::size_t u : g.non_outputs()) {
    const VertexMask odd = odd_neighbourhood(g, cm[u]);
    for (std::size_t v : g.non_outputs()) {
      if (v == u) continue;
      const Label l = *lab[v];
      const bool p1 = cm[u].test(v) && !in(l, {Label::X, Label::Y});
      const bool p2 = odd.test(v) && !in(l, {Label::Y, Label::Z});
      const bool p3 = l == Label::Y && cm[u].test(v) != odd.test(v);
      if (p1 || p2 || p3) succ[u].set(v);
    }
  }
  if (!close_order(succ)) return std::nullopt;
  return PauliFlow{c, order_names(g, succ)};
}

Gf2Matrix flow_matrix(const OpenGraph& g, const MeasurementLabelling& labels) {
  const Labels lab = total_labels(g, labels);
  for (std::size_t v : g.non_outputs()) {
    if (*lab[v] != Label::X && *lab[v] != Label::Z) {
      throw GraphError("flow matrix needs X or Z labels; \"" + g.name(v) + "\" is " + std::string(to_string(*lab[v])));
    }
  }
  Gf2Matrix m = reduced_adjacency_matrix(g);
  const auto row_of = positions(g.size(), g.non_outputs());
  const auto col_of = positions(g.size(), g.non_inputs());
  for (std::size_t v : g.non_outputs()) {
    if (*lab[v] != Label::Z) continue;
    const std::size_t r = row_of[v];
    const std::size_t c = col_of[v];
    for (std::size_t j = 0; j < m.cols(); ++j) m.set(r, j, false);
    for (std::size_t i = 0; i < m.rows(); ++i) m.set(i, c, false);
    m.set(r, c, true);
  }
  return m;
}

std::optional<PauliFlow> extract_flow(const OpenGraph& g, const MeasurementLabelling& labels) {
  const Gf2Matrix m = flow_matrix(g, labels);
  const auto n = gf2_right_inverse(m);
  if (!n) return std::nullopt;
  const Labels lab = labels.by_index(g);
  const auto rows = g.non_outputs();
  const auto cols = g.non_inputs();

  PauliFlow f;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t v = rows[r];
    VertexSet cv;
    if (*lab[v] == Label::X) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (n->get(i, r)) cv.insert(g.name(cols[i]));
      }
    } else {
      cv.insert(g.name(v));
      for (std::size_t i = 0; i < cols.size(); ++i) {
        bool bit = false;
        for (std::size_t s = 0; s < rows.size(); ++s) {
          const std::size_t w = rows[s];
          if (*lab[w] == Label::X && g.adjacent(w, v) && n->get(i, s)) bit = !bit;
        }
        if (bit) cv = symmetric_difference(cv, {g.name(cols[i])});
      }
    }
    f.corrections.emplace(g.name(v), std::move(cv));
  }
  return f;
}

std::vector<std::pair<std::string, std::string>> dag_witness_edges(const OpenGraph& g,
                                                                   const MeasurementLabelling& labels,
                                                                   const Gf2Matrix& n) {
  const Labels lab = total_labels(g, labels);
  const auto rows = g.non_inputs();
  const auto cols = g.non_outputs();
  if (n.rows() != rows.size() || n.cols() != cols.size()) {
    throw DimensionMismatch("witness must be " + std::to_string(rows.size()) + "x" + std::to_string(cols.size()));
  }
  for (std::size_t v : cols) {
    if (*lab[v] != Label::X && *lab[v] != Label::XY) {
      throw GraphError("witness check needs X or XY labels; \"" + g.name(v) + "\" is " +
                       std::string(to_string(*lab[v])));
    }
  }
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t u = rows[i];
    if (g.is_output(u) || *lab[u] != Label::XY) continue;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (n.get(i, j)) out.emplace_back(g.name(u), g.name(cols[j]));
    }
  }
  return out;
}

ViolationList verify_dag_witness(const OpenGraph& g, const MeasurementLabelling& labels, const Gf2Matrix& n) {
  const auto edges = dag_witness_edges(g, labels, n);
  ViolationList out;
  const Gf2Matrix product = reduced_adjacency_matrix(g) * n;
  const auto rows = g.non_outputs();
  for (std::size_t i = 0; i < product.rows(); ++i) {
    for (std::size_t j = 0; j < product.cols(); ++j) {
      if (product.get(i, j) != (i == j)) out.push_back({Condition::Product, g.name(rows[i]), g.name(rows[j])});
    }
  }
  std::vector<VertexMask> reach(g.size(), VertexMask(g.size()));
  for (const auto& [a, b] : edges) reach[g.index_of(a)].set(g.index_of(b));
  close_order(reach);
  for (const auto& [a, b] : edges) {
    if (a == b || reach[g.index_of(b)].test(g.index_of(a))) out.push_back({Condition::Acyclic, a, b});
  }
  return out;
}

std::optional<PauliFlow> dag_witness_flow(const OpenGraph& g, const MeasurementLabelling& labels,
                                          const Gf2Matrix& n) {
  const auto edges = dag_witness_edges(g, labels, n);
  const auto rows = g.non_inputs();
  const auto cols = g.non_outputs();
  PauliFlow f;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    VertexSet cv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (n.get(i, j)) cv.insert(g.name(rows[i]));
    }
    f.corrections.emplace(g.name(cols[j]), std::move(cv));
  }
  std::vector<VertexMask> succ(g.size(), VertexMask(g.size()));
  for (const auto& [a, b] : edges) succ[g.index_of(b)].set(g.index_of(a));
  if (!close_order(succ)) return std::nullopt;
  f.order = order_names(g, succ);
  return f;
}

MeasurementLabelling simplify_planar_labels(const MeasurementLabelling& labels) {
  MeasurementLabelling out;
  for (const auto& [v, l] : labels.entries()) {
    switch (l) {
      case Label::XY:
      case Label::XZ:
        out.set(v, Label::X);
        break;
      case Label::YZ:
        out.set(v, Label::Z);
        break;
      default:
        out.set(v, l);
    }
  }
  return out;
}

std::pair<MeasurementLabelling, PauliFlow> eliminate_Y(const OpenGraph& g, const MeasurementLabelling& labels,
                                                       const PauliFlow& f) {
  for (const auto& [v, l] : labels.entries()) {
    if (!in(l, {Label::X, Label::Y, Label::Z})) {
      throw GraphError("Y elimination needs Pauli labels; \"" + v + "\" is " + std::string(to_string(l)));
    }
  }
  if (!f.order.empty()) throw GraphError("Y elimination needs a flow with empty order");
  if (!verify_focussed(g, labels, f).empty()) throw GraphError("Y elimination needs a focussed flow");

  MeasurementLabelling lab = labels;
  PauliFlow flow = f;
  for (;;) {
    auto it = std::find_if(lab.entries().begin(), lab.entries().end(),
                           [](const auto& e) { return e.second == Label::Y; });
    if (it == lab.entries().end()) break;
    const std::string u = it->first;
    const VertexSet cu = flow.corrections.at(u);
    lab.set(u, cu.count(u) != 0 ? Label::Z : Label::X);

    PauliFlow last{flow.corrections, {}};
    for (const auto& [v, unused] : flow.corrections) {
      if (v != u) last.order.emplace(v, u);
    }
    if (!verify_pauli_flow(g, lab, last).empty()) {
      throw Error("relabelling \"" + u + "\" broke the flow");
    }
    for (auto& [v, cv] : flow.corrections) {
      if (v != u && cv.count(u) != 0) cv = symmetric_difference(cv, cu);
    }
    if (!verify_focussed(g, lab, flow).empty()) {
      throw Error("refocussing after relabelling \"" + u + "\" failed");
    }
  }
  return {lab, flow};
}

}  // namespace pauliflow
