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

#include <string>
#include <string_view>

#include "json.hpp"
#include "pauliflow/flow.hpp"
#include "pauliflow/open_graph.hpp"

namespace pauliflow {

struct LabelledGraph {
  OpenGraph graph;
  MeasurementLabelling labels;
};

/// Reads
///   {"vertices": [...], "edges": [[u, v], ...], "inputs": [...],
///    "outputs": [...], "labels": {"v": "X", ...}}
/// "vertices" is required, the rest default to empty; other keys are ignored.
/// Throws ParseError. Syntax errors are reported as source:line:col, schema
/// and validation errors as source: field[index]: message.
LabelledGraph parse_graph(std::string_view text, std::string_view source = "<input>");

/// Canonical document: sorted vertices, sorted edge pairs, sorted I/O sets.
nlohmann::ordered_json graph_to_json(const OpenGraph& g, const MeasurementLabelling& labels = {});
std::string serialize_graph(const OpenGraph& g, const MeasurementLabelling& labels = {});

/// Reads {"corrections": {"A": ["C", "E"], ...}, "order": [["D", "A"], ...]}.
/// Only the document structure is checked here; verify_pauli_flow checks the
/// flow against a graph.
PauliFlow parse_flow(std::string_view text, std::string_view source = "<input>");

nlohmann::ordered_json flow_to_json(const PauliFlow& f);
std::string serialize_flow(const PauliFlow& f);

}  // namespace pauliflow
