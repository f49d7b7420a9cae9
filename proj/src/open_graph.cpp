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

#include "pauliflow/open_graph.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "pauliflow/error.hpp"

namespace pauliflow {

namespace {

constexpr std::array<std::pair<Label, std::string_view>, 6> kLabelNames{{
    {Label::X, "X"},
    {Label::Y, "Y"},
    {Label::Z, "Z"},
    {Label::XY, "XY"},
    {Label::XZ, "XZ"},
    {Label::YZ, "YZ"},
}};

std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

}  // namespace

std::string_view to_string(Label l) {
  for (const auto& [label, name] : kLabelNames) {
    if (label == l) return name;
  }
  return "?";
}

std::optional<Label> parse_label(std::string_view s) {
  for (const auto& [label, name] : kLabelNames) {
    if (name == s) return label;
  }
  return std::nullopt;
}

std::size_t VertexMask::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexMask::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::size_t> VertexMask::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

VertexMask& VertexMask::operator^=(const VertexMask& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

VertexMask& VertexMask::operator&=(const VertexMask& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexMask& VertexMask::operator|=(const VertexMask& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexMask& VertexMask::subtract(const VertexMask& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

OpenGraph::OpenGraph(std::vector<std::string> vertices, const std::vector<Edge>& edges, const VertexSet& inputs,
                     const VertexSet& outputs)
    : names_(std::move(vertices)) {
  for (const auto& v : names_) {
    if (v.empty()) throw GraphError("vertex identifiers must be non-empty");
  }
  std::sort(names_.begin(), names_.end());
  if (auto dup = std::adjacent_find(names_.begin(), names_.end()); dup != names_.end()) {
    throw GraphError("duplicate vertex " + quoted(*dup));
  }
  for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
  adj_.assign(names_.size(), VertexMask(names_.size()));
  for (const auto& [a, b] : edges) {
    const std::size_t u = index_of(a);
    const std::size_t v = index_of(b);
    if (u == v) throw GraphError("self-loop on " + quoted(a));
    if (adj_[u].test(v)) throw GraphError("duplicate edge " + quoted(a) + " - " + quoted(b));
    adj_[u].set(v);
    adj_[v].set(u);
  }
  inputs_ = mask_of(inputs);
  outputs_ = mask_of(outputs);
}

std::optional<std::size_t> OpenGraph::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t OpenGraph::index_of(std::string_view name) const {
  auto v = find(name);
  if (!v) throw GraphError("unknown vertex " + quoted(name));
  return *v;
}

std::vector<std::pair<std::size_t, std::size_t>> OpenGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v : adj_[u].indices()) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<Edge> OpenGraph::edge_names() const {
  std::vector<Edge> out;
  for (auto [u, v] : edges()) out.emplace_back(names_[u], names_[v]);
  return out;
}

std::size_t OpenGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

VertexSet OpenGraph::inputs() const { return names_of(inputs_); }
VertexSet OpenGraph::outputs() const { return names_of(outputs_); }

std::vector<std::size_t> OpenGraph::non_outputs() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (!is_output(v)) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> OpenGraph::non_inputs() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (!is_input(v)) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> OpenGraph::internal() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (!is_input(v) && !is_output(v)) out.push_back(v);
  }
  return out;
}

VertexMask OpenGraph::mask_of(const VertexSet& names) const {
  VertexMask m(size());
  for (const auto& n : names) m.set(index_of(n));
  return m;
}

VertexSet OpenGraph::names_of(const VertexMask& mask) const {
  VertexSet out;
  for (std::size_t v : mask.indices()) out.insert(names_[v]);
  return out;
}

OpenGraph OpenGraph::with_io(const VertexSet& inputs, const VertexSet& outputs) const {
  OpenGraph g = *this;
  g.inputs_ = mask_of(inputs);
  g.outputs_ = mask_of(outputs);
  return g;
}

std::optional<Label> MeasurementLabelling::get(const std::string& v) const {
  auto it = entries_.find(v);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::optional<Label>> MeasurementLabelling::by_index(const OpenGraph& g) const {
  std::vector<std::optional<Label>> out(g.size());
  for (const auto& [v, l] : entries_) out[g.index_of(v)] = l;
  return out;
}

bool MeasurementLabelling::is_total(const OpenGraph& g) const {
  for (std::size_t v : g.non_outputs()) {
    if (!contains(g.name(v))) return false;
  }
  return true;
}

void validate_labelling(const OpenGraph& g, const MeasurementLabelling& labels, bool require_total) {
  for (const auto& [name, l] : labels.entries()) {
    const std::size_t v = g.index_of(name);
    if (g.is_output(v)) throw GraphError("output " + quoted(name) + " must not be labelled");
    if (g.is_input(v) && l != Label::X && l != Label::XY && l != Label::Y) {
      throw GraphError("input " + quoted(name) + " labelled " + std::string(to_string(l)) +
                       "; inputs admit only X, XY or Y");
    }
  }
  if (require_total) {
    for (std::size_t v : g.non_outputs()) {
      if (!labels.contains(g.name(v))) throw GraphError("non-output " + quoted(g.name(v)) + " is unlabelled");
    }
  }
}

VertexMask odd_neighbourhood(const OpenGraph& g, const VertexMask& a) {
  VertexMask out(g.size());
  for (std::size_t u : a.indices()) out ^= g.neighbours(u);
  return out;
}

VertexSet odd_neighbourhood(const OpenGraph& g, const VertexSet& a) {
  return g.names_of(odd_neighbourhood(g, g.mask_of(a)));
}

Gf2Matrix adjacency_matrix(const OpenGraph& g) {
  Gf2Matrix m(g.size(), g.size());
  for (auto [u, v] : g.edges()) {
    m.set(u, v, true);
    m.set(v, u, true);
  }
  m.set_labels(g.vertices(), g.vertices());
  return m;
}

Gf2Matrix reduced_adjacency_matrix(const OpenGraph& g) {
  const auto rows = g.non_outputs();
  const auto cols = g.non_inputs();
  Gf2Matrix m(rows.size(), cols.size());
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
  for (std::size_t c = 0; c < cols.size(); ++c) col_names.push_back(g.name(cols[c]));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    row_names.push_back(g.name(rows[r]));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (g.adjacent(rows[r], cols[c])) m.set(r, c, true);
    }
  }
  m.set_labels(std::move(row_names), std::move(col_names));
  return m;
}

std::pair<OpenGraph, MeasurementLabelling> trim_io(const OpenGraph& g, const MeasurementLabelling& labels) {
  VertexSet keep;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!(g.is_input(v) && g.is_output(v))) keep.insert(g.name(v));
  }
  return {induced_subgraph(g, keep), labels};
}

OpenGraph induced_subgraph(const OpenGraph& g, const VertexSet& keep) {
  for (const auto& v : keep) (void)g.index_of(v);
  std::vector<std::string> vertices(keep.begin(), keep.end());
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edge_names()) {
    if (keep.count(a) != 0 && keep.count(b) != 0) edges.emplace_back(a, b);
  }
  VertexSet inputs;
  VertexSet outputs;
  for (const auto& v : keep) {
    const std::size_t i = g.index_of(v);
    if (g.is_input(i)) inputs.insert(v);
    if (g.is_output(i)) outputs.insert(v);
  }
  return OpenGraph(std::move(vertices), edges, inputs, outputs);
}

}  // namespace pauliflow
