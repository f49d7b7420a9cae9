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

#include "pauliflow/search.hpp"

#include <algorithm>
#include <cstdint>

#include "pauliflow/error.hpp"

namespace pauliflow {

namespace {

void check_partial(const OpenGraph& g, const MeasurementLabelling& partial) {
  validate_labelling(g, partial, false);
  for (const auto& [v, l] : partial.entries()) {
    if (l != Label::X && l != Label::Z) {
      throw GraphError("partial labelling must use X or Z; \"" + v + "\" is " + std::string(to_string(l)));
    }
  }
}

// Vertex -> position in B, or SIZE_MAX.
std::vector<std::size_t> b_positions(const OpenGraph& g) {
  std::vector<std::size_t> pos(g.size(), SIZE_MAX);
  const auto b = g.internal();
  for (std::size_t i = 0; i < b.size(); ++i) pos[b[i]] = i;
  return pos;
}

}  // namespace

double per_call_budget(double p_total, std::size_t n_calls) {
  if (n_calls == 0) throw Error("per-call budget needs at least one call");
  return p_total / static_cast<double>(n_calls);
}

VarId x_var(std::size_t i) { return static_cast<VarId>(2 * i); }
VarId y_var(std::size_t i) { return static_cast<VarId>(2 * i + 1); }

VarMatrix partial_variable_flow_matrix(const OpenGraph& g, const MeasurementLabelling& partial) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.is_input(v) && g.is_output(v)) {
      throw GraphError("variable flow matrix needs disjoint inputs and outputs; \"" + g.name(v) + "\" is both");
    }
  }
  check_partial(g, partial);
  const auto lab = partial.by_index(g);
  const auto bpos = b_positions(g);
  const auto rows = g.non_outputs();
  const auto cols = g.non_inputs();
  auto free_var = [&](std::size_t v) { return bpos[v] != SIZE_MAX && !lab[v]; };
  auto is_z = [&](std::size_t v) { return lab[v] == Label::Z; };

  VarMatrix m(rows.size(), cols.size());
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
  for (std::size_t v : rows) row_names.push_back(g.name(v));
  for (std::size_t v : cols) col_names.push_back(g.name(v));
  m.set_labels(std::move(row_names), std::move(col_names));

  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t u = rows[r];
    if (free_var(u)) {
      m.declare(x_var(bpos[u]), Axis::Row, r);
      m.set_var_name(x_var(bpos[u]), "x_" + g.name(u));
    }
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::size_t w = cols[c];
      if (r == 0 && free_var(w)) {
        m.declare(y_var(bpos[w]), Axis::Column, c);
        m.set_var_name(y_var(bpos[w]), "y_" + g.name(w));
      }
      if (u == w) {
        if (is_z(u)) {
          m.set(r, c, MultiAffineExpr::constant(true));
        } else if (free_var(u)) {
          const auto one = MultiAffineExpr::constant(true);
          m.set(r, c, (one + MultiAffineExpr::variable(x_var(bpos[u]))) *
                          (one + MultiAffineExpr::variable(y_var(bpos[u]))));
        }
        continue;
      }
      if (!g.adjacent(u, w) || is_z(u) || is_z(w)) continue;
      MultiAffineExpr e = MultiAffineExpr::constant(true);
      if (free_var(u)) e = e * MultiAffineExpr::variable(x_var(bpos[u]));
      if (free_var(w)) e = e * MultiAffineExpr::variable(y_var(bpos[w]));
      m.set(r, c, std::move(e));
    }
  }
  return m;
}

VarMatrix variable_flow_matrix(const OpenGraph& g) { return partial_variable_flow_matrix(g, {}); }

AuxResult flow_search_aux(const OpenGraph& g, const MeasurementLabelling& partial, double p, Rng& rng) {
  check_partial(g, partial);
  const auto trimmed = trim_io(g, partial).first;
  const VarMatrix m = partial_variable_flow_matrix(trimmed, partial);
  AuxResult out;
  out.vars = m.variables().size();
  out.k = required_degree(out.vars, p);
  if (m.rows() == 0) {
    out.accepted = true;
  } else if (m.rows() <= m.cols()) {
    const RankSample s = sample_rank(m, p, rng);
    out.accepted = s.rank >= m.rows();
  }
  return out;
}

bool flow_search_aux(const OpenGraph& g, const MeasurementLabelling& partial, const SearchConfig& cfg) {
  Rng rng = derive_stream(cfg.seed, 0);
  return flow_search_aux(g, partial, cfg.error_probability, rng).accepted;
}

SearchOutcome flow_search_trials(const OpenGraph& g, const SearchConfig& cfg, std::size_t trials) {
  if (trials == 0) throw Error("at least one trial is required");
  SearchOutcome out;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng = derive_stream(cfg.seed, i);
    const AuxResult r = flow_search_aux(g, {}, cfg.error_probability, rng);
    out.trials_used = i + 1;
    out.k_used = r.k;
    out.vars = r.vars;
    if (r.accepted) {
      out.decision = true;
      break;
    }
  }
  return out;
}

bool flow_search(const OpenGraph& g, const SearchConfig& cfg) { return flow_search_trials(g, cfg, 1).decision; }

SearchOutcome find_labelling(const OpenGraph& g, const SearchConfig& cfg) {
  const OpenGraph trimmed = trim_io(g, {}).first;
  const auto b = trimmed.internal();
  const double p = per_call_budget(cfg.error_probability, 2 * b.size() + 1);

  SearchOutcome out;
  std::uint64_t stream = 0;
  auto call = [&](const MeasurementLabelling& partial) {
    Rng rng = derive_stream(cfg.seed, stream++);
    const AuxResult r = flow_search_aux(trimmed, partial, p, rng);
    ++out.trials_used;
    out.k_used = std::max(out.k_used, r.k);
    return r.accepted;
  };

  out.vars = 2 * b.size();
  if (!call({})) return out;

  MeasurementLabelling partial;
  for (const auto& i : trimmed.inputs()) partial.set(i, Label::X);
  for (std::size_t v : b) {
    const std::string& name = trimmed.name(v);
    bool placed = false;
    for (unsigned round = 0; round < cfg.retry_rounds && !placed; ++round) {
      for (Label l : {Label::X, Label::Z}) {
        partial.set(name, l);
        if (call(partial)) {
          placed = true;
          break;
        }
      }
    }
    if (!placed) {
      throw RetryBudgetExhausted("both labels rejected for \"" + name + "\" in " + std::to_string(cfg.retry_rounds) +
                                 " rounds");
    }
  }

  auto flow = extract_flow(trimmed, partial);
  if (!flow) throw Error("accepted labelling has no flow matrix right inverse");
  if (!verify_focussed(g, partial, *flow).empty()) throw Error("extracted flow failed verification");
  out.decision = true;
  out.labelling = std::move(partial);
  out.flow = std::move(flow);
  return out;
}

}  // namespace pauliflow
