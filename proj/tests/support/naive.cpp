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


#include "support/naive.hpp"

namespace pauliflow::testing {

namespace {

bool is_one_of(Label l, std::initializer_list<Label> ls) {
  for (Label x : ls) {
    if (l == x) return true;
  }
  return false;
}

}  // namespace

VertexSet naive_odd(const OpenGraph& g, const VertexSet& a) {
  VertexSet out;
  for (const auto& v : g.vertices()) {
    int n = 0;
    for (const auto& u : a) n += g.adjacent(g.index_of(u), g.index_of(v)) ? 1 : 0;
    if (n % 2 == 1) out.insert(v);
  }
  return out;
}

std::set<std::pair<std::string, std::string>> naive_closure(const std::set<std::pair<std::string, std::string>>& order) {
  auto out = order;
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [a, b] : std::set(out)) {
      for (const auto& [c, d] : std::set(out)) {
        if (b == c && out.emplace(a, d).second) grew = true;
      }
    }
  }
  return out;
}

std::set<NaiveViolation> naive_check(const OpenGraph& g, const MeasurementLabelling& labels, const PauliFlow& f,
                                     bool focussed) {
  const auto prec = naive_closure(f.order);
  auto before = [&](const std::string& a, const std::string& b) { return prec.count({a, b}) != 0; };
  std::set<NaiveViolation> out;
  for (std::size_t ui : g.non_outputs()) {
    const std::string& u = g.name(ui);
    const VertexSet& c = f.corrections.at(u);
    const VertexSet odd = naive_odd(g, c);
    const Label lu = *labels.get(u);
    for (const auto& v : c) {
      auto lv = labels.get(v);
      if (lv && u != v && !is_one_of(*lv, {Label::X, Label::Y}) && !before(u, v)) out.emplace(Condition::P1, u, v);
    }
    for (const auto& v : odd) {
      auto lv = labels.get(v);
      if (lv && u != v && !is_one_of(*lv, {Label::Y, Label::Z}) && !before(u, v)) out.emplace(Condition::P2, u, v);
    }
    for (std::size_t vi : g.non_outputs()) {
      const std::string& v = g.name(vi);
      if (!before(u, v) && u != v && labels.get(v) == Label::Y && (c.count(v) != 0) != (odd.count(v) != 0)) {
        out.emplace(Condition::P3, u, v);
      }
    }
    const bool in_c = c.count(u) != 0;
    const bool in_odd = odd.count(u) != 0;
    if (lu == Label::XY && !(!in_c && in_odd)) out.emplace(Condition::P4, u, u);
    if (lu == Label::XZ && !(in_c && in_odd)) out.emplace(Condition::P5, u, u);
    if (lu == Label::YZ && !(in_c && !in_odd)) out.emplace(Condition::P6, u, u);
    if (lu == Label::X && !in_odd) out.emplace(Condition::P7, u, u);
    if (lu == Label::Z && !in_c) out.emplace(Condition::P8, u, u);
    if (lu == Label::Y && in_c == in_odd) out.emplace(Condition::P9, u, u);
    if (!focussed) continue;
    for (std::size_t wi : g.non_outputs()) {
      const std::string& w = g.name(wi);
      if (w == u) continue;
      const Label lw = *labels.get(w);
      if (c.count(w) != 0 && !is_one_of(lw, {Label::XY, Label::X, Label::Y})) out.emplace(Condition::F1, u, w);
      if (odd.count(w) != 0 && !is_one_of(lw, {Label::XZ, Label::YZ, Label::Y, Label::Z})) {
        out.emplace(Condition::F2, u, w);
      }
      if (lw == Label::Y && (c.count(w) != 0) != (odd.count(w) != 0)) out.emplace(Condition::F3, u, w);
    }
  }
  return out;
}

std::set<NaiveViolation> to_naive(const ViolationList& v) {
  std::set<NaiveViolation> out;
  for (const auto& x : v) out.emplace(x.condition, x.u, x.v);
  return out;
}

}  // namespace pauliflow::testing
