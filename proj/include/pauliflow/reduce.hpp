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

#include <optional>
#include <vector>

#include "pauliflow/flow.hpp"
#include "pauliflow/open_graph.hpp"

namespace pauliflow {

struct ReductionResult {
  OpenGraph graph;
  MeasurementLabelling labelling;
  /// Internal vertices switched from X to Z.
  VertexSet relabelled;
  /// Former outputs, now Z-labelled non-outputs.
  VertexSet removed_outputs;
  /// Flow matrix after each round.
  std::vector<Gf2Matrix> rounds;
};

/// Shrinks O to |I| outputs. Each round takes a column basis of the flow
/// matrix, greedily scanning non-output columns in canonical order and then
/// output columns in reverse canonical order. Outputs outside the basis become
/// Z-labelled non-outputs; if there are none, every X-labelled internal vertex
/// outside the basis is switched to Z instead. Throws GraphError if I and O
/// meet or the labelling has no flow.
ReductionResult reduce_outputs(const OpenGraph& g, const MeasurementLabelling& labels);

/// An input set of size |O| for which g with all-X labels has flow: the
/// complement of the earliest column basis of the reduced adjacency matrix
/// with I empty. nullopt when that matrix is not right-invertible, since
/// adding inputs only deletes columns.
std::optional<VertexSet> find_inputs(const OpenGraph& g, const VertexSet& outputs);

/// Smallest output set for the given inputs under all-X labels: the vertices
/// whose rows fall outside the earliest row basis of the reduced adjacency
/// matrix with O empty. The result may overlap the inputs.
VertexSet minimal_outputs(const OpenGraph& g, const VertexSet& inputs);

}  // namespace pauliflow
