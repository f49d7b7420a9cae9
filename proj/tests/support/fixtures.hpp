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


// Shared graphs, matrices and instance generators for the test binaries.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pauliflow/flow.hpp"
#include "pauliflow/gf2_matrix.hpp"
#include "pauliflow/open_graph.hpp"
#include "pauliflow/random.hpp"

namespace pauliflow::testing {

// Eight-vertex example: inputs A, B; outputs F, G, H.
OpenGraph sample();
MeasurementLabelling sample_all_x();
MeasurementLabelling sample_d_z();
// The correction function of the worked example, with D < A and D < B.
PauliFlow sample_example_flow();

// sample() without the edge D-H.
OpenGraph sample_variant();

// Six-vertex X/XY example: inputs R, S; outputs V, W; U is X, R S T are XY.
OpenGraph xy_graph();
MeasurementLabelling xy_labels();

// Reduced adjacency matrix of sample (all X).
Gf2Matrix sample_reduced();
// Flow matrix of sample with D labelled Z.
Gf2Matrix sample_flow_d_z();
// Flow matrix of sample_variant with all X.
Gf2Matrix sample_variant_flow();
// Reduced adjacency matrix of xy_graph and its inverse.
Gf2Matrix xy_reduced();
Gf2Matrix xy_inverse();

// Every labelling of g's non-outputs over {X, Z}, inputs X only.
std::vector<MeasurementLabelling> all_xz_labellings(const OpenGraph& g);

// Canonical edge lists (vertex i named by letter 'a' + i) of all connected
// simple graphs on n vertices, one per isomorphism class.
std::vector<std::vector<std::pair<int, int>>> connected_graph_classes(int n);

struct Instance {
  OpenGraph graph;
  std::string tag;
};

// Each connected class with 1..max_n vertices, with every assignment of the
// vertices to {input, output, neither}.
std::vector<Instance> small_family(int max_n = 5);

// Random open graph: each edge with probability edge_prob, each vertex an
// input or an output with probability io_prob each (never both).
OpenGraph random_open_graph(int n, double edge_prob, double io_prob, Rng& rng);

// `count` random instances with 6 or 7 vertices, from a fixed seed.
std::vector<Instance> random_family(std::size_t count, std::uint64_t seed);

// small_family() followed by random_family(500, seed).
std::vector<Instance> criterion_family(std::uint64_t seed = 20260101);

// Random graph with exactly m edges on n vertices named v000.., with the
// first k vertices as inputs and the last k as outputs.
OpenGraph random_sized_graph(int n, int m, int k, Rng& rng);

// Smallest x with P(Binomial(n, q) <= x) >= 1 - alpha.
long binomial_upper_quantile(long n, double q, double alpha);
// Largest x with P(Binomial(n, q) < x) <= alpha, i.e. the one-sided lower
// acceptance threshold at level alpha.
long binomial_lower_threshold(long n, double q, double alpha);

}  // namespace pauliflow::testing
