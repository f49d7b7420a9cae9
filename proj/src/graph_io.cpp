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

#include "pauliflow/graph_io.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "pauliflow/error.hpp"

namespace pauliflow {

namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  json parse(std::string_view text) const {
    try {
      return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
      // e.byte is 1-based and points just past the offending character.
      const std::size_t at = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
      std::size_t line = 1;
      std::size_t col = 1;
      for (std::size_t i = 0; i < at; ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      throw ParseError(source_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
  }

  [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
    throw ParseError(source_ + ": " + path + ": " + msg);
  }

  const json& object(const json& doc) const {
    if (!doc.is_object()) throw ParseError(source_ + ": top-level value must be an object");
    return doc;
  }

  const json* optional_array(const json& doc, const char* key) const {
    auto it = doc.find(key);
    if (it == doc.end()) return nullptr;
    if (!it->is_array()) fail(key, "expected an array");
    return &*it;
  }

  std::string id(const json& v, const std::string& path) const {
    if (!v.is_string()) fail(path, "expected a string");
    std::string s = v.get<std::string>();
    if (s.empty()) fail(path, "vertex identifiers must be non-empty");
    return s;
  }

 private:
  std::string source_;
};

std::string at(const char* key, std::size_t i) { return std::string(key) + "[" + std::to_string(i) + "]"; }

std::string q(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

LabelledGraph parse_graph(std::string_view text, std::string_view source) {
  const Reader rd(source);
  const json doc = rd.parse(text);
  rd.object(doc);

  if (!doc.contains("vertices")) rd.fail("vertices", "missing");
  std::vector<std::string> vertices;
  VertexSet known;
  const json* vs = rd.optional_array(doc, "vertices");
  for (std::size_t i = 0; i < vs->size(); ++i) {
    std::string v = rd.id((*vs)[i], at("vertices", i));
    if (!known.insert(v).second) rd.fail(at("vertices", i), "duplicate vertex " + q(v));
    vertices.push_back(std::move(v));
  }
  auto known_id = [&](const json& v, const std::string& path) {
    std::string s = rd.id(v, path);
    if (known.count(s) == 0) rd.fail(path, "unknown vertex " + q(s));
    return s;
  };

  std::vector<Edge> edges;
  std::set<Edge> seen_edges;
  if (const json* es = rd.optional_array(doc, "edges")) {
    for (std::size_t i = 0; i < es->size(); ++i) {
      const json& e = (*es)[i];
      const std::string path = at("edges", i);
      if (!e.is_array() || e.size() != 2) rd.fail(path, "expected a pair of vertex identifiers");
      std::string a = known_id(e[0], path + "[0]");
      std::string b = known_id(e[1], path + "[1]");
      if (a == b) rd.fail(path, "self-loop on " + q(a));
      if (b < a) std::swap(a, b);
      if (!seen_edges.emplace(a, b).second) rd.fail(path, "duplicate edge " + q(a) + " - " + q(b));
      edges.emplace_back(std::move(a), std::move(b));
    }
  }

  auto read_set = [&](const char* key) {
    VertexSet out;
    if (const json* arr = rd.optional_array(doc, key)) {
      for (std::size_t i = 0; i < arr->size(); ++i) {
        std::string v = known_id((*arr)[i], at(key, i));
        if (!out.insert(v).second) rd.fail(at(key, i), "duplicate vertex " + q(v));
      }
    }
    return out;
  };
  const VertexSet inputs = read_set("inputs");
  const VertexSet outputs = read_set("outputs");

  MeasurementLabelling labels;
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_object()) rd.fail("labels", "expected an object");
    for (const auto& [name, value] : it->items()) {
      const std::string path = "labels." + name;
      if (known.count(name) == 0) rd.fail(path, "unknown vertex " + q(name));
      if (!value.is_string()) rd.fail(path, "expected a label string");
      const auto l = parse_label(value.get<std::string>());
      if (!l) rd.fail(path, "unknown label " + q(value.get<std::string>()) + "; expected X, Y, Z, XY, XZ or YZ");
      if (outputs.count(name) != 0) rd.fail(path, "outputs must not be labelled");
      if (inputs.count(name) != 0 && *l != Label::X && *l != Label::XY && *l != Label::Y) {
        rd.fail(path, "input labelled " + value.get<std::string>() + "; inputs admit only X, XY or Y");
      }
      labels.set(name, *l);
    }
  }

  return {OpenGraph(std::move(vertices), edges, inputs, outputs), std::move(labels)};
}

nlohmann::ordered_json graph_to_json(const OpenGraph& g, const MeasurementLabelling& labels) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertices();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edge_names()) doc["edges"].push_back({a, b});
  doc["inputs"] = g.inputs();
  doc["outputs"] = g.outputs();
  doc["labels"] = nlohmann::ordered_json::object();
  for (const auto& [v, l] : labels.entries()) doc["labels"][v] = std::string(to_string(l));
  return doc;
}

std::string serialize_graph(const OpenGraph& g, const MeasurementLabelling& labels) {
  return graph_to_json(g, labels).dump(2) + "\n";
}

PauliFlow parse_flow(std::string_view text, std::string_view source) {
  const Reader rd(source);
  const json doc = rd.parse(text);
  rd.object(doc);
  PauliFlow f;
  auto it = doc.find("corrections");
  if (it == doc.end()) rd.fail("corrections", "missing");
  if (!it->is_object()) rd.fail("corrections", "expected an object");
  for (const auto& [name, set] : it->items()) {
    const std::string path = "corrections." + name;
    if (!set.is_array()) rd.fail(path, "expected an array");
    VertexSet c;
    for (std::size_t i = 0; i < set.size(); ++i) {
      std::string w = rd.id(set[i], path + "[" + std::to_string(i) + "]");
      if (!c.insert(w).second) rd.fail(path + "[" + std::to_string(i) + "]", "duplicate vertex " + q(w));
    }
    f.corrections.emplace(name, std::move(c));
  }
  if (const json* order = rd.optional_array(doc, "order")) {
    for (std::size_t i = 0; i < order->size(); ++i) {
      const json& e = (*order)[i];
      const std::string path = at("order", i);
      if (!e.is_array() || e.size() != 2) rd.fail(path, "expected a pair of vertex identifiers");
      f.order.emplace(rd.id(e[0], path + "[0]"), rd.id(e[1], path + "[1]"));
    }
  }
  return f;
}

nlohmann::ordered_json flow_to_json(const PauliFlow& f) {
  nlohmann::ordered_json doc;
  doc["corrections"] = nlohmann::ordered_json::object();
  for (const auto& [v, c] : f.corrections) doc["corrections"][v] = c;
  doc["order"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : f.order) doc["order"].push_back({a, b});
  return doc;
}

std::string serialize_flow(const PauliFlow& f) { return flow_to_json(f).dump(2) + "\n"; }

}  // namespace pauliflow
