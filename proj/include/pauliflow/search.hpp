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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "pauliflow/flow.hpp"
#include "pauliflow/maxrank.hpp"
#include "pauliflow/open_graph.hpp"
#include "pauliflow/random.hpp"

namespace pauliflow {

struct SearchConfig {
  double error_probability = std::ldexp(1.0, -40);
  std::uint64_t seed = 0;
  unsigned retry_rounds = 64;
};

struct SearchOutcome {
  bool decision = false;
  std::optional<MeasurementLabelling> labelling;
  std::optional<PauliFlow> flow;
  std::size_t trials_used = 0;
  unsigned k_used = 0;
  std::size_t vars = 0;
};

/// p_total / n_calls. Throws Error when n_calls is 0.
double per_call_budget(double p_total, std::size_t n_calls);

/// Variables of vertex number i of B (canonical order): x = 2i, y = 2i + 1.
VarId x_var(std::size_t i);
VarId y_var(std::size_t i);

/// Reduced adjacency matrix with row v scaled by x_v and column v by y_v for
/// every v in B, and (1 + x_v)(1 + y_v) at their intersection. x_v is
/// row-confined and y_v column-confined. Throws GraphError if I and O meet.
VarMatrix variable_flow_matrix(const OpenGraph& g);

/// As above with the vertices labelled in `partial` substituted: X sets
/// x_v = y_v = 1, Z sets x_v = y_v = 0. Inputs carry no variables.
VarMatrix partial_variable_flow_matrix(const OpenGraph& g, const MeasurementLabelling& partial);

struct AuxResult {
  bool accepted = false;
  unsigned k = 0;
  std::size_t vars = 0;
};

/// One randomized full-row-rank test of the partial variable flow matrix of
/// trim_io(g). `partial` must be an {X, Z} labelling of non-outputs.
AuxResult flow_search_aux(const OpenGraph& g, const MeasurementLabelling& partial, double p, Rng& rng);
/// Same, drawing from stream 0 of cfg.seed.
bool flow_search_aux(const OpenGraph& g, const MeasurementLabelling& partial, const SearchConfig& cfg);

/// Up to `trials` independent tests (trial i uses stream i of cfg.seed),
/// stopping at the first acceptance.
SearchOutcome flow_search_trials(const OpenGraph& g, const SearchConfig& cfg, std::size_t trials);
bool flow_search(const OpenGraph& g, const SearchConfig& cfg);

/// Labels inputs X, then fixes B one vertex at a time in canonical order,
/// trying X before Z. Each randomized call gets per_call_budget(p, 2|B| + 1)
/// and its own stream. A vertex where both labels are rejected is retried up
/// to retry_rounds times before RetryBudgetExhausted is thrown. On success the
/// flow is extracted and checked to be focussed on g.
SearchOutcome find_labelling(const OpenGraph& g, const SearchConfig& cfg);

}  // namespace pauliflow
