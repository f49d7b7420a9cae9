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
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pauliflow/flow.hpp"
#include "pauliflow/gf2_matrix.hpp"
#include "pauliflow/open_graph.hpp"

namespace pauliflow {

struct OracleLimits {
  std::size_t max_non_outputs = 6;
  std::size_t max_non_inputs = 7;
  /// Cap on locally admissible correction sets per vertex.
  std::size_t max_candidates_per_vertex = 1024;
};

/// Exhaustive Pauli flow search for a total labelling.
///
/// Every non-output u gets the subsets of the non-inputs that satisfy P4-P9
/// for u. The order is built from the top: a vertex can be placed once one of
/// its candidates forces (through P1-P3) only vertices already placed. Placing
/// every placeable vertex each round is complete, because a ≺-maximal vertex
/// among the unplaced ones of any flow is always placeable. The witness has
/// the forced order of the chosen corrections.
///
/// Throws LimitExceeded beyond `lim` or 64 vertices.
std::optional<PauliFlow> brute_force_flow(const OpenGraph& g, const MeasurementLabelling& labels,
                                          const OracleLimits& lim = {});

/// Tries every total labelling over `alphabet` (a subset of {X, Y, Z}); inputs
/// only take X or Y. Labellings are enumerated with the earliest vertex most
/// significant and labels in X, Y, Z order. {X, Z} labellings are decided by
/// flow matrix right-invertibility, others by brute_force_flow. Returns the
/// first labelling with flow, together with a flow.
std::optional<std::pair<MeasurementLabelling, PauliFlow>> brute_force_label_search(const OpenGraph& g,
                                                                                   const std::set<Label>& alphabet,
                                                                                   const OracleLimits& lim = {});
/// Same, with the vertices labelled in `fixed` held at their labels.
std::optional<std::pair<MeasurementLabelling, PauliFlow>> brute_force_label_search(const OpenGraph& g,
                                                                                   const std::set<Label>& alphabet,
                                                                                   const OracleLimits& lim,
                                                                                   const MeasurementLabelling& fixed);

/// Basis of {x : m x = 0}, as column vectors.
std::vector<std::vector<bool>> gf2_kernel(const Gf2Matrix& m);

/// Every N with m N = Id. Throws LimitExceeded when there are more than `cap`.
std::vector<Gf2Matrix> all_right_inverses(const Gf2Matrix& m, std::size_t cap);

}  // namespace pauliflow
