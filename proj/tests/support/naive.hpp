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


// Direct transcriptions of the flow definitions over name sets, kept apart
// from the bitset code in the library so the two can be compared.
#pragma once

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "pauliflow/flow.hpp"
#include "pauliflow/open_graph.hpp"

namespace pauliflow::testing {

using NaiveViolation = std::tuple<Condition, std::string, std::string>;

VertexSet naive_odd(const OpenGraph& g, const VertexSet& a);

// Transitive closure of `order` as a set of (u, v) pairs.
std::set<std::pair<std::string, std::string>> naive_closure(const std::set<std::pair<std::string, std::string>>& order);

// P1-P9 for every non-output u, and F1-F3 when `focussed`. The order is
// assumed acyclic.
std::set<NaiveViolation> naive_check(const OpenGraph& g, const MeasurementLabelling& labels, const PauliFlow& f,
                                     bool focussed);

std::set<NaiveViolation> to_naive(const ViolationList& v);

}  // namespace pauliflow::testing
