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

#include "pauliflow/reduce.hpp"

#include <algorithm>

#include "pauliflow/error.hpp"

namespace pauliflow {

ReductionResult reduce_outputs(const OpenGraph& g, const MeasurementLabelling& labels) {
  if ((g.input_mask() & g.output_mask()).any()) {
    throw GraphError("output reduction needs disjoint inputs and outputs");
  }
  if (!gf2_right_inverse(flow_matrix(g, labels))) throw GraphError("labelling has no flow");

  ReductionResult res{g, labels, {}, {}, {}};
  while (res.graph.outputs().size() > res.graph.inputs().size()) {
    const OpenGraph& cur = res.graph;
    const Gf2Matrix m = flow_matrix(cur, res.labelling);
    const auto cols = cur.non_inputs();
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!cur.is_output(cols[j])) order.push_back(j);
    }
    for (std::size_t j = cols.size(); j-- > 0;) {
      if (cur.is_output(cols[j])) order.push_back(j);
    }
    std::vector<bool> in_basis(cols.size(), false);
    for (std::size_t j : gf2_independent_columns(m, order)) in_basis[j] = true;

    VertexSet outputs = cur.outputs();
    VertexSet dropped;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!in_basis[j] && cur.is_output(cols[j])) dropped.insert(cur.name(cols[j]));
    }
    if (!dropped.empty()) {
      for (const auto& o : dropped) {
        outputs.erase(o);
        res.labelling.set(o, Label::Z);
        res.removed_outputs.insert(o);
      }
      res.graph = cur.with_io(cur.inputs(), outputs);
    } else {
      bool switched = false;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const std::string& v = cur.name(cols[j]);
        if (!in_basis[j] && res.labelling.get(v) == Label::X) {
          res.labelling.set(v, Label::Z);
          res.relabelled.insert(v);
          switched = true;
        }
      }
      if (!switched) throw Error("output reduction made no progress");
    }
    const Gf2Matrix next = flow_matrix(res.graph, res.labelling);
    if (!gf2_right_inverse(next)) throw Error("output reduction lost the flow");
    res.rounds.push_back(next);
  }
  return res;
}

std::optional<VertexSet> find_inputs(const OpenGraph& g, const VertexSet& outputs) {
  const OpenGraph h = g.with_io({}, outputs);
  const Gf2Matrix m = reduced_adjacency_matrix(h);
  const auto basis = gf2_independent_columns(m);
  if (basis.size() < m.rows()) return std::nullopt;
  const auto cols = h.non_inputs();
  VertexSet inputs(h.vertices().begin(), h.vertices().end());
  for (std::size_t j : basis) inputs.erase(h.name(cols[j]));
  return inputs;
}

VertexSet minimal_outputs(const OpenGraph& g, const VertexSet& inputs) {
  const OpenGraph h = g.with_io(inputs, {});
  const Gf2Matrix m = reduced_adjacency_matrix(h);
  const auto rows = h.non_outputs();
  VertexSet outputs(h.vertices().begin(), h.vertices().end());
  for (std::size_t i : gf2_independent_rows(m)) outputs.erase(h.name(rows[i]));
  return outputs;
}

}  // namespace pauliflow
