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

#include "pauliflow/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "pauliflow/error.hpp"
#include "pauliflow/graph_io.hpp"
#include "pauliflow/oracle.hpp"
#include "pauliflow/reduce.hpp"
#include "pauliflow/search.hpp"

namespace pauliflow::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string witness;
  double p = std::ldexp(1.0, -40);
  std::optional<std::uint64_t> seed;
  std::size_t trials = 1;
  bool json = false;
  bool oracle = false;
  std::string alphabet = "XYZ";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LabelledGraph load(const std::string& path) { return parse_graph(read_file(path), path); }

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  std::random_device rd;
  return (std::uint64_t{rd()} << 32) | rd();
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (const auto& v : s) out += (out.size() > 1 ? ", " : "") + v;
  return out + "}";
}

// Scalars as "key: value", flows and violation lists expanded.
void print_text(std::ostream& out, const Json& report) {
  for (const auto& [key, value] : report.items()) {
    if (key == "flow") {
      out << "corrections:\n";
      for (const auto& [v, c] : value["corrections"].items()) {
        out << "  c(" << v << ") = " << set_text(c.get<VertexSet>()) << "\n";
      }
      out << "order:\n";
      for (const auto& e : value["order"]) out << "  " << e[0].get<std::string>() << " < " << e[1].get<std::string>() << "\n";
    } else if (key == "violations") {
      out << "violations:\n";
      for (const auto& v : value) {
        out << "  " << v["condition"].get<std::string>() << " " << v["u"].get<std::string>() << " "
            << v["v"].get<std::string>() << "\n";
      }
    } else if (key == "labels") {
      out << "labels:\n";
      for (const auto& [v, l] : value.items()) out << "  " << v << ": " << l.get<std::string>() << "\n";
    } else if (value.is_string()) {
      out << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(std::ostream& out, const Json& report, bool json) {
  if (json) {
    out << report.dump(2) << "\n";
  } else {
    print_text(out, report);
  }
}

Json violations_json(const ViolationList& list) {
  Json arr = Json::array();
  for (const auto& v : list) arr.push_back({{"condition", std::string(to_string(v.condition))}, {"u", v.u}, {"v", v.v}});
  return arr;
}

bool xz_only(const MeasurementLabelling& labels) {
  for (const auto& [v, l] : labels.entries()) {
    if (l != Label::X && l != Label::Z) return false;
  }
  return true;
}

int verdict(Json& report, bool yes) {
  report["result"] = yes ? "YES" : "NO";
  return yes ? kYes : kNo;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto [g, labels] = load(o.file);
  validate_labelling(g, labels, true);
  Json report;
  report["result"] = "";
  int code = kNo;
  if (!o.witness.empty()) {
    const PauliFlow f = parse_flow(read_file(o.witness), o.witness);
    const ViolationList v = verify_pauli_flow(g, labels, f);
    code = verdict(report, v.empty());
    report["mode"] = "witness";
    if (v.empty()) {
      report["focussed"] = verify_focussed(g, labels, f).empty();
      report["flow"] = flow_to_json(f);
    } else {
      report["violations"] = violations_json(v);
    }
  } else {
    std::optional<PauliFlow> f;
    if (o.oracle) {
      report["mode"] = "oracle";
      f = brute_force_flow(g, labels);
    } else {
      if (!xz_only(labels)) throw GraphError(o.file + ": labels outside {X, Z} need --witness or --oracle");
      report["mode"] = "flow-matrix";
      f = extract_flow(g, labels);
    }
    code = verdict(report, f.has_value());
    if (f) report["flow"] = flow_to_json(*f);
  }
  emit(out, report, o.json);
  return code;
}

int cmd_search(const Options& o, std::ostream& out) {
  const auto [g, labels] = load(o.file);
  Json report;
  report["result"] = "";
  int code = kNo;
  if (o.oracle) {
    report["mode"] = "oracle";
    code = verdict(report, brute_force_label_search(g, {Label::X, Label::Z}, {}, labels).has_value());
  } else {
    const std::uint64_t seed = resolve_seed(o);
    AuxResult r;
    std::size_t used = 0;
    for (std::size_t i = 0; i < o.trials && !r.accepted; ++i) {
      Rng rng = derive_stream(seed, i);
      r = flow_search_aux(g, labels, o.p, rng);
      used = i + 1;
    }
    code = verdict(report, r.accepted);
    report["p"] = o.p;
    report["k"] = r.k;
    report["vars"] = r.vars;
    report["trials"] = used;
    report["seed"] = seed;
  }
  emit(out, report, o.json);
  return code;
}

int cmd_label(const Options& o, std::ostream& out) {
  const auto [g, labels] = load(o.file);
  if (!labels.empty()) throw GraphError(o.file + ": label expects an unlabelled graph; use search for partial labellings");
  Json report;
  report["result"] = "";
  std::optional<std::pair<MeasurementLabelling, PauliFlow>> found;
  if (o.oracle) {
    report["mode"] = "oracle";
    found = brute_force_label_search(g, {Label::X, Label::Z});
  } else {
    SearchConfig cfg;
    cfg.error_probability = o.p;
    cfg.seed = resolve_seed(o);
    SearchOutcome res = find_labelling(g, cfg);
    if (res.decision) found.emplace(*res.labelling, *res.flow);
    report["p"] = o.p;
    report["k"] = res.k_used;
    report["vars"] = res.vars;
    report["trials"] = res.trials_used;
    report["seed"] = cfg.seed;
  }
  const int code = verdict(report, found.has_value());
  if (!found) {
    emit(out, report, o.json);
    return code;
  }
  Json doc = graph_to_json(g, found->first);
  const Json flow = flow_to_json(found->second);
  doc["corrections"] = flow["corrections"];
  doc["order"] = flow["order"];
  doc["report"] = report;
  out << doc.dump(2) << "\n";
  return code;
}

Json all_x(const OpenGraph& g) {
  MeasurementLabelling l;
  for (std::size_t v : g.non_outputs()) l.set(g.name(v), Label::X);
  return graph_to_json(g, l);
}

int cmd_reduce_outputs(const Options& o, std::ostream& out) {
  const auto [g, labels] = load(o.file);
  validate_labelling(g, labels, true);
  if (!xz_only(labels)) throw GraphError(o.file + ": output reduction needs an {X, Z} labelling");
  if (!gf2_right_inverse(flow_matrix(g, labels))) {
    Json report;
    verdict(report, false);
    report["reason"] = "labelling has no flow";
    emit(out, report, o.json);
    return kNo;
  }
  const ReductionResult res = reduce_outputs(g, labels);
  Json doc = graph_to_json(res.graph, res.labelling);
  doc["relabelled"] = res.relabelled;
  doc["removed_outputs"] = res.removed_outputs;
  out << doc.dump(2) << "\n";
  return kYes;
}

int cmd_min_outputs(const Options& o, std::ostream& out) {
  const auto [g, labels] = load(o.file);
  const VertexSet inputs = g.inputs();
  out << all_x(g.with_io(inputs, minimal_outputs(g, inputs))).dump(2) << "\n";
  return kYes;
}

int cmd_find_inputs(const Options& o, std::ostream& out) {
  const auto [g, labels] = load(o.file);
  const VertexSet outputs = g.outputs();
  const auto inputs = find_inputs(g, outputs);
  if (!inputs) {
    Json report;
    verdict(report, false);
    report["reason"] = "no input set gives flow";
    emit(out, report, o.json);
    return kNo;
  }
  out << all_x(g.with_io(*inputs, outputs)).dump(2) << "\n";
  return kYes;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const auto [g, labels] = load(o.file);
  Json report;
  report["result"] = "";
  int code = kNo;
  if (labels.is_total(g)) {
    validate_labelling(g, labels, true);
    report["mode"] = "fixed-labels";
    const auto f = brute_force_flow(g, labels);
    code = verdict(report, f.has_value());
    if (f) report["flow"] = flow_to_json(*f);
  } else {
    std::set<Label> alphabet;
    for (char ch : o.alphabet) alphabet.insert(ch == 'X' ? Label::X : ch == 'Y' ? Label::Y : Label::Z);
    report["mode"] = "label-search";
    const auto found = brute_force_label_search(g, alphabet, {}, labels);
    code = verdict(report, found.has_value());
    if (found) {
      Json l = Json::object();
      for (const auto& [v, lab] : found->first.entries()) l[v] = std::string(to_string(lab));
      report["labels"] = l;
      report["flow"] = flow_to_json(found->second);
    }
  }
  emit(out, report, o.json);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pauli flow decision, labelling search and input/output reduction for open graphs", "pauliflow"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t seed = 0;

  const CLI::Validator probability(
      [](std::string& s) -> std::string {
        try {
          const double v = std::stod(s);
          if (v > 0.0 && v <= 0.5) return {};
        } catch (const std::exception&) {
        }
        return "error probability must be a number in (0, 1/2]";
      },
      "PROB in (0, 1/2]");

  auto common = [&](CLI::App* c) {
    c->add_option("file", o.file, "open graph JSON file")->required();
    c->add_flag("--json", o.json, "machine-readable report");
  };
  auto randomized = [&](CLI::App* c) {
    c->add_option("-p,--error-prob", o.p, "error probability bound")->check(probability);
    c->add_option("--seed", seed, "random seed (default: fresh from the OS, always reported)");
    c->add_flag("--oracle", o.oracle, "exhaustive search instead of the randomized algorithm");
  };

  CLI::App* check = app.add_subcommand("check", "verify the flow of a fully labelled graph");
  common(check);
  check->add_option("--witness", o.witness, "flow witness JSON file to verify");
  check->add_flag("--oracle", o.oracle, "exhaustive flow search for any labels");

  CLI::App* search = app.add_subcommand("search", "decide whether some {X, Z} labelling extending the file's labels has flow");
  common(search);
  randomized(search);
  search->add_option("--trials", o.trials, "independent trials; YES if any accepts")->check(CLI::PositiveNumber);

  CLI::App* label = app.add_subcommand("label", "find a labelling with flow and print it with its correction sets");
  common(label);
  randomized(label);

  CLI::App* reduce = app.add_subcommand("reduce-outputs", "shrink the output set to the size of the input set");
  common(reduce);
  CLI::App* min_out = app.add_subcommand("min-outputs", "smallest output set for the file's inputs (all X)");
  common(min_out);
  CLI::App* find_in = app.add_subcommand("find-inputs", "input set for the file's outputs (all X)");
  common(find_in);

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive flow or label search on small graphs");
  common(oracle);
  oracle->add_option("--alphabet", o.alphabet, "labels to search when the file is not fully labelled")
      ->check(CLI::IsMember({"X", "XZ", "XY", "XYZ", "Z", "Y", "YZ"}));

  std::vector<const char*> argv{"pauliflow"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  }
  if (search->parsed() || label->parsed()) {
    if (search->count("--seed") + label->count("--seed") > 0) o.seed = seed;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (label->parsed()) return cmd_label(o, out);
    if (reduce->parsed()) return cmd_reduce_outputs(o, out);
    if (min_out->parsed()) return cmd_min_outputs(o, out);
    if (find_in->parsed()) return cmd_find_inputs(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
  } catch (const RetryBudgetExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kRetryExhausted;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace pauliflow::cli
