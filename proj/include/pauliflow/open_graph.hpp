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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pauliflow/gf2_matrix.hpp"

namespace pauliflow {

/// Measurement planes and Pauli measurements.
enum class Label : std::uint8_t { X, Y, Z, XY, XZ, YZ };

std::string_view to_string(Label l);
std::optional<Label> parse_label(std::string_view s);

/// Dynamic bitset over vertex indices.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] bool test(std::size_t i) const { return ((words_[i / 64] >> (i % 64)) & 1U) != 0; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  [[nodiscard]] std::size_t count() const;
  [[nodiscard]] bool none() const;
  [[nodiscard]] bool any() const { return !none(); }
  [[nodiscard]] std::vector<std::size_t> indices() const;

  VertexMask& operator^=(const VertexMask& o);
  VertexMask& operator&=(const VertexMask& o);
  VertexMask& operator|=(const VertexMask& o);
  /// this \ o
  VertexMask& subtract(const VertexMask& o);
  friend VertexMask operator^(VertexMask a, const VertexMask& b) { return a ^= b; }
  friend VertexMask operator&(VertexMask a, const VertexMask& b) { return a &= b; }
  friend VertexMask operator|(VertexMask a, const VertexMask& b) { return a |= b; }
  friend bool operator==(const VertexMask&, const VertexMask&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

using VertexSet = std::set<std::string>;
using Edge = std::pair<std::string, std::string>;

/// Simple undirected graph with designated inputs and outputs.
///
/// Vertices are non-empty strings kept in lexicographic (canonical) order;
/// vertex indices refer to that order, and every matrix built from the graph
/// uses it for rows and columns.
class OpenGraph {
 public:
  OpenGraph() = default;
  /// Throws GraphError on empty or duplicate names, self-loops, duplicate
  /// edges, or references to unknown vertices.
  OpenGraph(std::vector<std::string> vertices, const std::vector<Edge>& edges, const VertexSet& inputs,
            const VertexSet& outputs);

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& vertices() const { return names_; }
  [[nodiscard]] const std::string& name(std::size_t v) const { return names_[v]; }
  [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;
  /// Throws GraphError for unknown names.
  [[nodiscard]] std::size_t index_of(std::string_view name) const;

  [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  [[nodiscard]] const VertexMask& neighbours(std::size_t v) const { return adj_[v]; }
  /// Edges as (u, v) index pairs with u < v, sorted.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  [[nodiscard]] std::vector<Edge> edge_names() const;
  [[nodiscard]] std::size_t edge_count() const;

  [[nodiscard]] bool is_input(std::size_t v) const { return inputs_.test(v); }
  [[nodiscard]] bool is_output(std::size_t v) const { return outputs_.test(v); }
  [[nodiscard]] const VertexMask& input_mask() const { return inputs_; }
  [[nodiscard]] const VertexMask& output_mask() const { return outputs_; }
  [[nodiscard]] VertexSet inputs() const;
  [[nodiscard]] VertexSet outputs() const;

  /// Non-outputs (rows of the reduced adjacency matrix), canonical order.
  [[nodiscard]] std::vector<std::size_t> non_outputs() const;
  /// Non-inputs (columns of the reduced adjacency matrix), canonical order.
  [[nodiscard]] std::vector<std::size_t> non_inputs() const;
  /// Vertices that are neither inputs nor outputs.
  [[nodiscard]] std::vector<std::size_t> internal() const;

  [[nodiscard]] VertexMask mask_of(const VertexSet& names) const;
  [[nodiscard]] VertexSet names_of(const VertexMask& mask) const;

  /// Same vertices and edges with new input/output sets.
  [[nodiscard]] OpenGraph with_io(const VertexSet& inputs, const VertexSet& outputs) const;

  friend bool operator==(const OpenGraph& a, const OpenGraph& b) {
    return a.names_ == b.names_ && a.adj_ == b.adj_ && a.inputs_ == b.inputs_ && a.outputs_ == b.outputs_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<VertexMask> adj_;
  VertexMask inputs_;
  VertexMask outputs_;
};

/// Partial or total map from non-outputs to labels, keyed by vertex name.
class MeasurementLabelling {
 public:
  MeasurementLabelling() = default;
  explicit MeasurementLabelling(std::map<std::string, Label> entries) : entries_(std::move(entries)) {}

  void set(const std::string& v, Label l) { entries_[v] = l; }
  void erase(const std::string& v) { entries_.erase(v); }
  [[nodiscard]] std::optional<Label> get(const std::string& v) const;
  [[nodiscard]] bool contains(const std::string& v) const { return entries_.count(v) != 0; }
  [[nodiscard]] const std::map<std::string, Label>& entries() const { return entries_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] bool empty() const { return entries_.empty(); }

  /// Labels by canonical vertex index. Throws GraphError for unknown vertices.
  [[nodiscard]] std::vector<std::optional<Label>> by_index(const OpenGraph& g) const;
  [[nodiscard]] bool is_total(const OpenGraph& g) const;

  friend bool operator==(const MeasurementLabelling&, const MeasurementLabelling&) = default;

 private:
  std::map<std::string, Label> entries_;
};

/// Throws GraphError when a label sits on an unknown vertex or an output, an
/// input carries a label outside {X, XY, Y}, or (when require_total) a
/// non-output is unlabelled.
void validate_labelling(const OpenGraph& g, const MeasurementLabelling& labels, bool require_total);

/// Vertices adjacent to an odd number of members of `a`.
VertexMask odd_neighbourhood(const OpenGraph& g, const VertexMask& a);
/// Name-based form; throws GraphError for unknown vertices.
VertexSet odd_neighbourhood(const OpenGraph& g, const VertexSet& a);

/// Full |V| x |V| adjacency matrix.
Gf2Matrix adjacency_matrix(const OpenGraph& g);

/// Adjacency minor with output rows and input columns removed: rows are the
/// non-outputs, columns the non-inputs, both in canonical order and labelled.
Gf2Matrix reduced_adjacency_matrix(const OpenGraph& g);

/// Deletes the vertices in I n O; inputs become I \ O, outputs O \ I.
std::pair<OpenGraph, MeasurementLabelling> trim_io(const OpenGraph& g, const MeasurementLabelling& labels);

/// Subgraph induced by `keep`, with inputs and outputs intersected.
OpenGraph induced_subgraph(const OpenGraph& g, const VertexSet& keep);

}  // namespace pauliflow
