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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pauliflow/gf2_matrix.hpp"
#include "pauliflow/open_graph.hpp"

namespace pauliflow {

using CorrectionMap = std::map<std::string, VertexSet>;

/// Correction function c: non-outputs -> subsets of non-inputs, plus a strict
/// partial order on non-outputs. `order` holds pairs (u, v) meaning u < v; the
/// order used for checking is the transitive closure of these pairs.
struct PauliFlow {
  CorrectionMap corrections;
  std::set<std::pair<std::string, std::string>> order;

  friend bool operator==(const PauliFlow&, const PauliFlow&) = default;
};

enum class Condition {
  P1, P2, P3, P4, P5, P6, P7, P8, P9,
  F1, F2, F3,
  Order,    // the order relation has a cycle
  Product,  // witness matrix product differs from the identity
  Acyclic,  // witness digraph F' has a cycle
};

std::string_view to_string(Condition c);

struct Violation {
  Condition condition;
  std::string u;
  std::string v;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Empty means valid.
using ViolationList = std::vector<Violation>;

/// Checks P1-P9 for every non-output u. Conditions on a vertex v only apply
/// when v is a non-output (labels and order live on non-outputs).
///
/// Throws GraphError when the labelling is not total and valid, when c is not
/// defined exactly on the non-outputs, when some c(u) meets the inputs, or
/// when the order mentions an output or unknown vertex.
ViolationList verify_pauli_flow(const OpenGraph& g, const MeasurementLabelling& labels, const PauliFlow& f);

/// verify_pauli_flow plus F1-F3.
ViolationList verify_focussed(const OpenGraph& g, const MeasurementLabelling& labels, const PauliFlow& f);

/// Smallest order forced on c by P1, P2 and P3 (the latter read as: v must
/// follow u whenever membership of v in c(u) and Odd(c(u)) disagrees). The
/// returned order is transitively closed. nullopt when the forced relation
/// is cyclic.
std::optional<PauliFlow> infer_forced_order(const OpenGraph& g, const MeasurementLabelling& labels,
                                            const CorrectionMap& c);

/// Reduced adjacency matrix with every Z vertex's row and column cleared and a
/// 1 at its diagonal position. Throws GraphError unless labels is a total
/// {X, Z} labelling.
Gf2Matrix flow_matrix(const OpenGraph& g, const MeasurementLabelling& labels);

/// Focussed flow with empty order from a right inverse N of the flow matrix,
/// or nullopt when none exists. An X vertex v gets the support of column v of
/// N. A Z vertex v gets {v} plus the support of N applied to the adjacency
/// column of v on the X rows, which cancels v's neighbourhood there.
std::optional<PauliFlow> extract_flow(const OpenGraph& g, const MeasurementLabelling& labels);

/// Checks a candidate |non-inputs| x |non-outputs| matrix n for an {X, XY}
/// labelling: reduced adjacency times n is the identity, and the digraph F'
/// with an edge u -> v for every n(u, v) = 1 with u labelled XY is acyclic
/// (a loop counts as a cycle). Throws DimensionMismatch on wrong shape.
ViolationList verify_dag_witness(const OpenGraph& g, const MeasurementLabelling& labels, const Gf2Matrix& n);

/// Edges (u, v) of F' as names.
std::vector<std::pair<std::string, std::string>> dag_witness_edges(const OpenGraph& g,
                                                                   const MeasurementLabelling& labels,
                                                                   const Gf2Matrix& n);

/// Flow read from the columns of n, ordered by v < u for each F' edge u -> v
/// (transitively closed). nullopt when F' is cyclic.
std::optional<PauliFlow> dag_witness_flow(const OpenGraph& g, const MeasurementLabelling& labels,
                                          const Gf2Matrix& n);

/// XY -> X, XZ -> X, YZ -> Z.
MeasurementLabelling simplify_planar_labels(const MeasurementLabelling& labels);

/// Removes Y labels one vertex at a time (lowest name first): u becomes Z when
/// u is in c(u) and X otherwise, then every other c(v) containing u absorbs
/// c(u). Each intermediate flow is checked with u last in the order; the
/// result is a focussed flow with empty order. Throws GraphError when f is not
/// focussed with empty order or labels use planar labels, and Error if a
/// check fails.
std::pair<MeasurementLabelling, PauliFlow> eliminate_Y(const OpenGraph& g, const MeasurementLabelling& labels,
                                                       const PauliFlow& f);

}  // namespace pauliflow
