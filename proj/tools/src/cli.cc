// Copyright 2026 The cmld Authors.
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

#include "cmld/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmld/circuit_text.h"
#include "cmld/engine.h"
#include "cmld/errors.h"
#include "cmld/graph.h"
#include "cmld/motif.h"
#include "selftest.h"

namespace cmld::cli {
namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::uint64_t seed = 1;
  double delta = 0.01;
  int field_bits = 0;
  std::int64_t max_reps = 0;
  int threads = 1;
  int max_degree = 16;
  int max_substitute_degree = 10;
  bool timing = false;

  SolveOptions Options() const {
    SolveOptions o;
    o.seed = seed;
    o.delta = delta;
    o.field_bits = field_bits;
    o.max_trials = max_reps;
    o.threads = threads;
    o.max_degree = max_degree;
    o.max_substitute_degree = max_substitute_degree;
    return o;
  }
};

template <typename T>
std::optional<T> EnvNumber(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::istringstream in(raw);
  T value{};
  if (!(in >> value) || !in.eof()) {
    throw InputError(std::string("environment variable ") + name +
                     " is not a number: '" + raw + "'");
  }
  return value;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Parses `path` with `parse`, prefixing errors with the file name.
template <typename Parse>
auto ParseFile(const std::string& path, Parse parse) {
  const std::string text = ReadFile(path);
  try {
    return parse(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json PlanJson(const RepetitionPlan& plan) {
  return Json{{"q", plan.q},
              {"trials", plan.trials},
              {"grouping", plan.worst_grouping}};
}

Json VerdictJson(const Verdict& v) {
  Json j;
  j["answer"] = v.yes ? "yes" : "no";
  j["trials"] = v.trials_run;
  j["plan"] = PlanJson(v.plan);
  j["seed"] = v.seed;
  j["field_bits"] = v.field_bits;
  return j;
}

Json OptionalInt(const std::optional<int>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::vector<std::string> Labels(const ColoredGraph& g,
                                const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (VertexId v : vs) out.push_back(g.label(v));
  return out;
}

Json SweepJson(const SweepResult& r, const char* param, std::uint64_t seed) {
  Json j;
  j["answer"] = r.value ? "yes" : "no";
  j[param] = OptionalInt(r.value);
  j["trials"] = r.trials_run;
  Json steps = Json::array();
  for (const Verdict& v : r.steps) {
    Json s = VerdictJson(v);
    s.erase("seed");
    steps.push_back(std::move(s));
  }
  if (!r.steps.empty()) j["plan"] = PlanJson(r.steps.back().plan);
  j["seed"] = seed;
  j["field_bits"] = r.steps.empty() ? 0 : r.steps.back().field_bits;
  j["steps"] = std::move(steps);
  return j;
}

struct Inputs {
  std::string graph;
  std::string motif;
  std::string circuit;
  std::string colors;
  std::optional<int> k;
  int max_p = 4;
  std::string format_kind;
  std::string format_file;
};

CmldInstance ColoredCircuit(const Inputs& in, const ParsedCircuit& pc, int k) {
  const Coloring coloring = ParseFile(in.colors, ParseColoring);
  const Motif motif = ParseFile(in.motif, ParseMotif);
  std::map<std::string, std::string> color_of(coloring.begin(), coloring.end());
  std::map<std::string, ColorId> color_id;
  CmldInstance inst;
  inst.k = k;
  for (const auto& [label, mu] : motif.entries) {
    color_id.emplace(label, static_cast<ColorId>(inst.multiplicity.size()));
    inst.multiplicity.push_back(mu);
  }
  inst.var_color.resize(pc.var_names.size());
  for (std::size_t v = 0; v < pc.var_names.size(); ++v) {
    auto it = color_of.find(pc.var_names[v]);
    if (it == color_of.end()) {
      throw InputError(in.colors + ": no color for variable '" +
                       pc.var_names[v] + "'");
    }
    auto [cid, fresh] = color_id.emplace(
        it->second, static_cast<ColorId>(inst.multiplicity.size()));
    if (fresh) inst.multiplicity.push_back(0);  // color outside the motif
    inst.var_color[v] = cid->second;
  }
  inst.circuit = pc.circuit;
  return inst;
}

std::string Summary(const std::string& cmd, const Json& j, double seconds) {
  std::ostringstream s;
  if (cmd == "selftest") {
    s << cmd << ": " << (j["pass"].get<bool>() ? "pass" : "FAIL");
    for (const auto& c : j["checks"]) {
      s << "\n  " << (c["pass"].get<bool>() ? "ok    " : "FAIL  ")
        << c["name"].get<std::string>() << ": " << c["detail"].get<std::string>();
    }
    s << "\n  " << std::fixed << std::setprecision(3) << seconds << " s";
    return s.str();
  }
  s << cmd << ": " << j.value("answer", std::string("?"));
  for (const char* p : {"p", "q"}) {
    if (j.contains(p) && !j[p].is_null()) s << " (" << p << " = " << j[p] << ")";
  }
  if (j.contains("vertices")) {
    s << " {";
    for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
      s << (i ? " " : "") << j["vertices"][i].get<std::string>();
    }
    s << "}";
  }
  if (j.contains("trials")) s << ", " << j["trials"] << " trial(s)";
  if (j.contains("plan")) {
    s << ", planned " << j["plan"]["trials"] << " at q = "
      << std::setprecision(4) << j["plan"]["q"].get<double>();
  }
  s << ", " << std::fixed << std::setprecision(3) << seconds << " s";
  return s.str();
}

Json Execute(const std::string& cmd, const Inputs& in, const RunConfig& cfg) {
  const SolveOptions opts = cfg.Options();
  if (cmd == "selftest") return RunSelfTest(opts);
  if (cmd == "format") {
    const std::string text = ReadFile(in.format_file);
    std::string canonical;
    try {
      if (in.format_kind == "graph") {
        canonical = FormatGraph(ParseGraph(text));
      } else if (in.format_kind == "motif") {
        canonical = FormatMotif(ParseMotif(text));
      } else if (in.format_kind == "coloring") {
        canonical = FormatColoring(ParseColoring(text));
      } else {
        const ParsedCircuit pc = ParseCircuit(text);
        canonical = FormatCircuit(pc.circuit, pc.var_names) + "\n";
      }
    } catch (const InputError& e) {
      throw InputError(in.format_file + ": " + e.what());
    }
    return Json{{"kind", in.format_kind}, {"text", canonical}};
  }
  if (cmd == "mld") {
    const ParsedCircuit pc = ParseFile(in.circuit, ParseCircuit);
    const int k = *in.k;
    Verdict v;
    if (in.colors.empty()) {
      v = SolveMld(pc.circuit, k, opts);
    } else {
      v = SolveCmld(ColoredCircuit(in, pc, k), opts);
    }
    Json j = VerdictJson(v);
    j["k"] = k;
    return j;
  }

  const ColoredGraph g = ParseFile(in.graph, ParseGraph);
  const Motif m = ParseFile(in.motif, ParseMotif);
  if (cmd == "decide") {
    Json j = in.k ? VerdictJson(DecideMultisetMotif(g, m, *in.k, opts))
                  : VerdictJson(DecideGraphMotif(g, m, opts));
    j["k"] = in.k ? *in.k : m.size();
    return j;
  }
  if (cmd == "find") {
    const auto occ = FindOccurrence(g, m, opts);
    Json j;
    j["answer"] = occ ? "yes" : "no";
    j["vertices"] = occ ? Labels(g, occ->vertices) : std::vector<std::string>{};
    j["trials"] = occ ? occ->trials_run : 0;
    j["seed"] = cfg.seed;
    return j;
  }
  if (cmd == "min-add") return SweepJson(MinAdd(g, m, opts, in.max_p), "p", cfg.seed);
  if (cmd == "min-cc") return SweepJson(MinCc(g, m, opts), "q", cfg.seed);
  const SubstituteResult r = MinSubstitute(g, m, opts);
  Json j;
  j["answer"] = r.p ? "yes" : "no";
  j["p"] = OptionalInt(r.p);
  j["trials"] = r.trials_run;
  j["plan"] = PlanJson(r.plan);
  j["seed"] = r.seed;
  j["field_bits"] = r.field_bits;
  return j;
}

void AddRunOptions(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "RNG seed (default $CMLD_SEED or 1)");
  sub->add_option("--delta", cfg.delta, "error bound for 'no' answers")
      ->check(CLI::Validator(
          [](std::string& s) -> std::string {
            double d = 0;
            std::istringstream in(s);
            if (!(in >> d) || !in.eof() || d <= 0 || d >= 1) {
              return "delta must lie strictly between 0 and 1";
            }
            return {};
          },
          "(0,1)"));
  sub->add_option("--field-bits", cfg.field_bits, "field width b of GF(2^b)")
      ->check(CLI::Range(1, 32));
  sub->add_option("--max-reps", cfg.max_reps, "cap on trials per decision")
      ->check(CLI::PositiveNumber);
  sub->add_option("--threads", cfg.threads,
                  "worker threads (default $CMLD_THREADS or 1)")
      ->check(CLI::Range(1, 1024));
  sub->add_option("--max-k", cfg.max_degree, "resource guard on k")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-substitute-k", cfg.max_substitute_degree,
                  "resource guard on k for min-substitute")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--timing", cfg.timing, "include wall time in the JSON");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  try {
    if (auto s = EnvNumber<std::uint64_t>("CMLD_SEED")) cfg.seed = *s;
    if (auto t = EnvNumber<int>("CMLD_THREADS")) cfg.threads = std::max(1, *t);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  Inputs in;
  CLI::App app{"Constrained multilinear detection and graph motif search"};
  app.name("cmld");
  app.require_subcommand(1);

  auto graph_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", in.graph, "graph file")->required();
    sub->add_option("motif", in.motif, "motif file")->required();
    AddRunOptions(sub, cfg);
    return sub;
  };
  graph_cmd("decide", "is the motif realized by a connected vertex set?")
      ->add_option("--k", in.k, "Multiset Motif: target size k")
      ->check(CLI::PositiveNumber);
  graph_cmd("find", "report one occurrence of the motif");
  graph_cmd("min-add", "fewest extra vertices connecting the motif")
      ->add_option("--max-p", in.max_p, "largest p tried")
      ->check(CLI::NonNegativeNumber);
  graph_cmd("min-cc", "fewest components covering the motif");
  graph_cmd("min-substitute", "fewest substitutions on a connected k-set");

  CLI::App* mld = app.add_subcommand("mld", "multilinear detection on a circuit");
  mld->add_option("circuit", in.circuit, "circuit file")->required();
  mld->add_option("--k", in.k, "target degree")->required()->check(CLI::PositiveNumber);
  auto* colors = mld->add_option("--colors", in.colors, "variable coloring file");
  auto* motif = mld->add_option("--motif", in.motif, "color multiplicities file");
  colors->needs(motif);
  motif->needs(colors);
  AddRunOptions(mld, cfg);

  CLI::App* fmt = app.add_subcommand("format", "print a file in canonical form");
  fmt->add_option("kind", in.format_kind, "graph, motif, coloring or circuit")
      ->required()
      ->check(CLI::IsMember({"graph", "motif", "coloring", "circuit"}));
  fmt->add_option("file", in.format_file, "input file")->required();

  CLI::App* selftest = app.add_subcommand("selftest", "run reduced built-in checks");
  AddRunOptions(selftest, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    Json j;
    j["command"] = cmd;
    Json result = Execute(cmd, in, cfg);
    for (auto& [key, value] : result.items()) j[key] = std::move(value);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (cfg.timing) j["wall_seconds"] = seconds;
    if (cmd == "format") {
      out << j["text"].get<std::string>();
      return kExitOk;
    }
    out << j.dump(2) << "\n";
    err << Summary(cmd, j, seconds) << "\n";
    if (cmd == "selftest" && !j["pass"].get<bool>()) return kExitInternal;
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace cmld::cli
