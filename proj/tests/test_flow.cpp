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


#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "pauliflow/error.hpp"
#include "pauliflow/flow.hpp"
#include "pauliflow/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

namespace pauliflow {
namespace {

using testing::sample;
using testing::sample_d_z;
using testing::sample_example_flow;

MeasurementLabelling random_labels(const OpenGraph& g, Rng& rng, bool planar) {
  static const std::vector<Label> all{Label::X, Label::Y, Label::Z, Label::XY, Label::XZ, Label::YZ};
  static const std::vector<Label> input_ok{Label::X, Label::Y, Label::XY};
  MeasurementLabelling l;
  for (std::size_t v : g.non_outputs()) {
    const auto& pool = g.is_input(v) ? input_ok : all;
    const std::size_t n = planar ? pool.size() : (g.is_input(v) ? 2 : 3);
    l.set(g.name(v), pool[rng() % n]);
  }
  return l;
}

CorrectionMap random_corrections(const OpenGraph& g, Rng& rng) {
  CorrectionMap c;
  for (std::size_t u : g.non_outputs()) {
    VertexSet s;
    for (std::size_t v : g.non_inputs()) {
      if (rng() % 3 == 0) s.insert(g.name(v));
    }
    c[g.name(u)] = s;
  }
  return c;
}

// Random acyclic relation: pairs consistent with a shuffled order.
std::set<std::pair<std::string, std::string>> random_order(const OpenGraph& g, Rng& rng) {
  auto rows = g.non_outputs();
  std::shuffle(rows.begin(), rows.end(), rng);
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rng() % 3 == 0) out.emplace(g.name(rows[i]), g.name(rows[j]));
    }
  }
  return out;
}

TEST(Flow, WorkedExampleIsAPauliFlow) {
  EXPECT_TRUE(verify_pauli_flow(sample(), sample_d_z(), sample_example_flow()).empty());
}

TEST(Flow, WorkedExampleFailsF2ExactlyAtD) {
  const auto v = verify_focussed(sample(), sample_d_z(), sample_example_flow());
  ASSERT_FALSE(v.empty());
  for (const auto& x : v) {
    EXPECT_EQ(x.condition, Condition::F2);
    EXPECT_EQ(x.u, "D");
  }
}

TEST(Flow, FocussedVariantWithEmptyOrder) {
  auto f = sample_example_flow();
  f.corrections["D"] = {"C", "D"};
  f.order.clear();
  EXPECT_TRUE(verify_focussed(sample(), sample_d_z(), f).empty());
}

TEST(Flow, DroppingTheOrderBreaksP2) {
  auto f = sample_example_flow();
  f.order.clear();
  const auto v = testing::to_naive(verify_pauli_flow(sample(), sample_d_z(), f));
  EXPECT_EQ(v, (std::set<testing::NaiveViolation>{{Condition::P2, "D", "A"}, {Condition::P2, "D", "B"}}));
}

TEST(Flow, CyclicOrderIsReported) {
  auto f = sample_example_flow();
  f.order.emplace("A", "D");
  const auto v = verify_pauli_flow(sample(), sample_d_z(), f);
  EXPECT_NE(std::find_if(v.begin(), v.end(), [](const Violation& x) { return x.condition == Condition::Order; }),
            v.end());
}

TEST(Flow, MalformedFlowsAreRejected) {
  const auto g = sample();
  auto f = sample_example_flow();
  f.corrections.erase("E");
  EXPECT_THROW((void)verify_pauli_flow(g, sample_d_z(), f), GraphError);
  f = sample_example_flow();
  f.corrections["F"] = {};
  EXPECT_THROW((void)verify_pauli_flow(g, sample_d_z(), f), GraphError);
  f = sample_example_flow();
  f.corrections["A"].insert("B");
  EXPECT_THROW((void)verify_pauli_flow(g, sample_d_z(), f), GraphError);
  f = sample_example_flow();
  f.order.emplace("A", "G");
  EXPECT_THROW((void)verify_pauli_flow(g, sample_d_z(), f), GraphError);
  EXPECT_THROW((void)verify_pauli_flow(g, MeasurementLabelling({{"A", Label::X}}), sample_example_flow()),
               GraphError);
}

TEST(Flow, ChecksAgreeWithDirectTranscription) {
  Rng rng(21);
  int valid = 0;
  for (int t = 0; t < 3000; ++t) {
    const auto g = testing::random_open_graph(2 + static_cast<int>(rng() % 5), 0.5, 0.25, rng);
    const auto labels = random_labels(g, rng, true);
    PauliFlow f{random_corrections(g, rng), random_order(g, rng)};
    if (t % 3 == 0) {
      // oracle witnesses make valid flows common
      try {
        if (auto w = brute_force_flow(g, labels)) f = *w;
      } catch (const LimitExceeded&) {
      }
    }
    const auto p = verify_pauli_flow(g, labels, f);
    ASSERT_EQ(testing::to_naive(p), testing::naive_check(g, labels, f, false));
    ASSERT_EQ(testing::to_naive(verify_focussed(g, labels, f)), testing::naive_check(g, labels, f, true));
    valid += p.empty() ? 1 : 0;
  }
  EXPECT_GT(valid, 200);
}

// Whether some strict order makes c a flow: try every linear order.
bool some_order_works(const OpenGraph& g, const MeasurementLabelling& labels, const CorrectionMap& c) {
  auto rows = g.non_outputs();
  do {
    PauliFlow f{c, {}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) f.order.emplace(g.name(rows[i]), g.name(rows[j]));
    }
    if (testing::naive_check(g, labels, f, false).empty()) return true;
  } while (std::next_permutation(rows.begin(), rows.end()));
  return false;
}

TEST(Flow, ForcedOrderExistsExactlyWhenSomeOrderWorks) {
  Rng rng(22);
  int found = 0;
  for (int t = 0; t < 1500; ++t) {
    const auto g = testing::random_open_graph(2 + static_cast<int>(rng() % 5), 0.5, 0.25, rng);
    const auto labels = random_labels(g, rng, t % 2 == 0);
    CorrectionMap c = random_corrections(g, rng);
    if (t % 2 == 1) {
      try {
        if (auto w = brute_force_flow(g, labels)) c = w->corrections;
      } catch (const LimitExceeded&) {
      }
    }
    // only the order-dependent conditions are interesting here
    bool local_ok = true;
    for (const auto& [cond, u, v] : testing::naive_check(g, labels, PauliFlow{c, {}}, false)) {
      if (cond != Condition::P1 && cond != Condition::P2 && cond != Condition::P3) local_ok = false;
    }
    if (!local_ok) continue;
    const auto forced = infer_forced_order(g, labels, c);
    ASSERT_EQ(forced.has_value(), some_order_works(g, labels, c));
    if (forced) {
      ++found;
      ASSERT_TRUE(verify_pauli_flow(g, labels, *forced).empty());
      ASSERT_EQ(forced->order, testing::naive_closure(forced->order));
    }
  }
  EXPECT_GT(found, 100);
}

TEST(Flow, FlowMatrixOfSampleWithDZ) {
  const auto m = flow_matrix(sample(), sample_d_z());
  EXPECT_EQ(m, testing::sample_flow_d_z());
  EXPECT_EQ(flow_matrix(sample(), testing::sample_all_x()), testing::sample_reduced());
  EXPECT_THROW((void)flow_matrix(sample(), MeasurementLabelling({{"A", Label::X}})), GraphError);
  auto y = sample_d_z();
  y.set("C", Label::Y);
  EXPECT_THROW((void)flow_matrix(sample(), y), GraphError);
}

TEST(Flow, ExtractedFlowIsFocussed) {
  const auto f = extract_flow(sample(), sample_d_z());
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(f->order.empty());
  EXPECT_TRUE(verify_focussed(sample(), sample_d_z(), *f).empty());
  EXPECT_FALSE(extract_flow(sample(), testing::sample_all_x()).has_value());
}

TEST(Flow, ExtractionSucceedsExactlyAtRightInvertibility) {
  Rng rng(23);
  int yes = 0;
  for (int t = 0; t < 800; ++t) {
    const auto g = testing::random_open_graph(1 + static_cast<int>(rng() % 8), 0.4, 0.25, rng);
    MeasurementLabelling l;
    for (std::size_t v : g.non_outputs()) l.set(g.name(v), g.is_input(v) || rng() % 3 ? Label::X : Label::Z);
    const auto f = extract_flow(g, l);
    ASSERT_EQ(f.has_value(), gf2_right_inverse(flow_matrix(g, l)).has_value());
    if (f) {
      ++yes;
      ASSERT_TRUE(f->order.empty());
      ASSERT_TRUE(testing::naive_check(g, l, *f, true).empty());
    }
  }
  EXPECT_GT(yes, 50);
}

TEST(Flow, XyExampleWitness) {
  const auto g = testing::xy_graph();
  const auto l = testing::xy_labels();
  EXPECT_EQ(reduced_adjacency_matrix(g), testing::xy_reduced());
  EXPECT_EQ(testing::xy_reduced() * testing::xy_inverse(), Gf2Matrix::identity(4));
  EXPECT_TRUE(verify_dag_witness(g, l, testing::xy_inverse()).empty());
  EXPECT_EQ(dag_witness_edges(g, l, testing::xy_inverse()),
            (std::vector<std::pair<std::string, std::string>>{{"T", "U"}}));
  const auto f = dag_witness_flow(g, l, testing::xy_inverse());
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->corrections, (CorrectionMap{{"R", {"V"}}, {"S", {"W"}}, {"T", {"U", "V", "W"}}, {"U", {"T"}}}));
  EXPECT_EQ(f->order, (std::set<std::pair<std::string, std::string>>{{"U", "T"}}));
  EXPECT_TRUE(verify_pauli_flow(g, l, *f).empty());
}

TEST(Flow, DagWitnessReportsProductAndCycles) {
  const auto g = testing::xy_graph();
  const auto l = testing::xy_labels();
  auto bad = testing::xy_inverse();
  bad.flip(0, 0);
  const auto v = verify_dag_witness(g, l, bad);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().condition, Condition::Product);

  // every vertex XY: the loop-free F' of the inverse now has T -> U -> T
  MeasurementLabelling all_xy({{"R", Label::XY}, {"S", Label::XY}, {"T", Label::XY}, {"U", Label::XY}});
  const auto w = verify_dag_witness(g, all_xy, testing::xy_inverse());
  ASSERT_FALSE(w.empty());
  for (const auto& x : w) EXPECT_EQ(x.condition, Condition::Acyclic);
  EXPECT_FALSE(dag_witness_flow(g, all_xy, testing::xy_inverse()).has_value());
  EXPECT_THROW((void)verify_dag_witness(g, l, Gf2Matrix(3, 4)), DimensionMismatch);
}

TEST(Flow, SimplifyPlanarLabels) {
  const MeasurementLabelling l({{"a", Label::XY}, {"b", Label::XZ}, {"c", Label::YZ}, {"d", Label::Y}});
  EXPECT_EQ(simplify_planar_labels(l),
            MeasurementLabelling({{"a", Label::X}, {"b", Label::X}, {"c", Label::Z}, {"d", Label::Y}}));
}

TEST(Flow, EliminatingYKeepsAFocussedFlow) {
  Rng rng(24);
  int done = 0;
  for (int t = 0; t < 4000 && done < 150; ++t) {
    const auto g = testing::random_open_graph(2 + static_cast<int>(rng() % 5), 0.5, 0.25, rng);
    const auto labels = random_labels(g, rng, false);
    // With an empty order every condition is local to u, so each vertex can
    // pick its own correction set.
    PauliFlow f;
    bool ok = true;
    const auto cols = g.non_inputs();
    for (std::size_t u : g.non_outputs()) {
      bool got = false;
      for (std::uint32_t s = 0; s < (1U << cols.size()) && !got; ++s) {
        VertexSet c;
        for (std::size_t j = 0; j < cols.size(); ++j) {
          if ((s >> j) & 1U) c.insert(g.name(cols[j]));
        }
        PauliFlow probe{{}, {}};
        for (std::size_t w : g.non_outputs()) probe.corrections[g.name(w)] = {};
        probe.corrections[g.name(u)] = c;
        bool local = true;
        for (const auto& [cond, a, b] : testing::naive_check(g, labels, probe, true)) local = local && a != g.name(u);
        if (local) {
          f.corrections[g.name(u)] = c;
          got = true;
        }
      }
      ok = ok && got;
    }
    if (!ok) continue;
    bool has_y = false;
    for (const auto& [v, l] : labels.entries()) has_y = has_y || l == Label::Y;
    ASSERT_TRUE(verify_focussed(g, labels, f).empty());
    const auto [l2, f2] = eliminate_Y(g, labels, f);
    for (const auto& [v, l] : l2.entries()) ASSERT_TRUE(l == Label::X || l == Label::Z);
    ASSERT_TRUE(f2.order.empty());
    ASSERT_TRUE(verify_focussed(g, l2, f2).empty());
    ASSERT_TRUE(gf2_right_inverse(flow_matrix(g, l2)).has_value());
    done += has_y ? 1 : 0;
  }
  EXPECT_GT(done, 50);
}

}  // namespace
}  // namespace pauliflow
