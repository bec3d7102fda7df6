// Copyright 2026 The SCA Authors
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

#include "sca/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>

#include "sca/chains.hpp"
#include "sca/error.hpp"
#include "sca/formats.hpp"
#include "sca/pipeline.hpp"

namespace sca::cli {

namespace {

namespace fs = std::filesystem;

struct Flags {
  std::vector<std::string> programs;
  std::vector<std::string> traces;
  std::vector<std::string> chains;
  std::string vulndb;
  std::string manifest;
  std::string registry;
  std::string lockfile;
  std::string mode;
  std::string baseline;
  std::string write_lockfile;
  std::vector<std::string> framework_prefixes;
  std::vector<std::string> library_prefixes;
  std::string entry_filter;
  std::size_t max_chain_length = 16;
  std::size_t max_chains_per_sink = 1000;
  std::string merge_mode = "fold";
  std::string graph_mode;
  std::string format = "json";
  bool fail_on_findings = false;
  bool stats = false;
  std::string out;
  std::string out_dir;
  std::string from;
  std::string to;
  std::string app_graph;
};

const std::vector<std::string> kGraphModes{"static-only", "dynamic-only", "combined"};
const std::vector<std::string> kResolveModes{"declared", "maven", "npm", "lockfile"};

void add_format(CLI::App* sub, Flags& f) {
  sub->add_option("--format", f.format, "Report format")
      ->check(CLI::IsMember({"json", "markdown"}))
      ->capture_default_str();
  sub->add_option("--out", f.out, "Write the output to this file instead of stdout");
}

void add_origin_options(CLI::App* sub, Flags& f) {
  sub->add_option("--framework-prefix", f.framework_prefixes,
                  "Class-name prefix of framework code (repeatable)");
  sub->add_option("--library-prefix", f.library_prefixes,
                  "PREFIX=G:A:V: classes under PREFIX belong to that library (repeatable)");
}

void add_graph_inputs(CLI::App* sub, Flags& f) {
  sub->add_option("--trace", f.traces, "Execution trace, JSON lines (repeatable)")
      ->check(CLI::ExistingFile);
  sub->add_option("--chains", f.chains,
                  "Chain file, or directory of chain files (repeatable)")
      ->check(CLI::ExistingPath);
  sub->add_option("--entrypoint-filter", f.entry_filter,
                  "Keep only entry points with this method name");
  sub->add_option("--merge-mode", f.merge_mode, "Chain merge strategy")
      ->check(CLI::IsMember({"fold", "fixpoint"}))
      ->capture_default_str();
  add_origin_options(sub, f);
}

void add_resolution_inputs(CLI::App* sub, Flags& f) {
  sub->add_option("--manifest", f.manifest, "Project manifest")->check(CLI::ExistingFile);
  sub->add_option("--registry", f.registry, "Registry snapshot")->check(CLI::ExistingFile);
  sub->add_option("--lockfile", f.lockfile, "Lockfile to replay")->check(CLI::ExistingFile);
}

Coordinate parse_coordinate_flag(const std::string& text, const std::string& flag) {
  try {
    return Coordinate::parse(text);
  } catch (const Error& e) {
    throw Error(flag + ": " + e.what());
  }
}

std::vector<std::pair<std::string, Coordinate>> library_rules(const Flags& f) {
  std::vector<std::pair<std::string, Coordinate>> out;
  for (const auto& spec : f.library_prefixes) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error("--library-prefix expects PREFIX=G:A:V, got '" + spec + "'");
    }
    out.emplace_back(spec.substr(0, eq),
                     parse_coordinate_flag(spec.substr(eq + 1), "--library-prefix"));
  }
  return out;
}

std::vector<ChainFile> load_chain_files(const std::vector<std::string>& paths) {
  std::vector<ChainFile> out;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
          files.push_back(entry.path());
        }
      }
      std::sort(files.begin(), files.end());
      for (const auto& file : files) {
        out.push_back(formats::load_chains(formats::read_file(file)));
      }
    } else {
      out.push_back(formats::load_chains(formats::read_file(p)));
    }
  }
  return out;
}

std::vector<TraceDocument> load_traces(const std::vector<std::string>& paths) {
  std::vector<TraceDocument> out;
  for (const auto& p : paths) out.push_back(formats::load_trace(formats::read_file(p)));
  return out;
}

ProgramDocument load_program_file(const std::string& path) {
  return formats::load_program(formats::read_file(path));
}

const std::string& single_program(const Flags& f) {
  if (f.programs.size() != 1) {
    throw Error("exactly one --program is required");
  }
  return f.programs.front();
}

pipeline::GraphInputs graph_inputs(const Flags& f) {
  pipeline::GraphInputs in;
  in.app = load_program_file(single_program(f));
  in.traces = load_traces(f.traces);
  in.chains = load_chain_files(f.chains);
  in.map = pipeline::build_origin_map(f.framework_prefixes, library_rules(f), in.chains);
  if (!f.entry_filter.empty()) in.config.entry_filter.method_name = f.entry_filter;
  in.merge_mode = compose::merge_mode_from_string(f.merge_mode);
  return in;
}

depres::ResolutionResult resolve_with(depres::Mode mode, const Flags& f) {
  if (f.registry.empty()) throw Error("--registry is required for resolution");
  const auto registry = formats::load_registry(formats::read_file(f.registry));
  if (mode == depres::Mode::kLockfile) {
    if (f.lockfile.empty()) throw Error("--lockfile is required in lockfile mode");
    return depres::replay_lockfile(formats::load_lockfile(formats::read_file(f.lockfile)),
                                   registry);
  }
  if (f.manifest.empty()) {
    throw Error("--manifest is required in " + std::string(depres::to_string(mode)) +
                " mode");
  }
  const auto manifest = formats::load_manifest(formats::read_file(f.manifest));
  switch (mode) {
    case depres::Mode::kDeclared:
      return depres::resolve_declared(manifest, registry);
    case depres::Mode::kMaven:
      return depres::resolve_maven(manifest, registry);
    case depres::Mode::kNpm:
      return depres::resolve_npm(manifest, registry);
    case depres::Mode::kLockfile:
      break;
  }
  return {};
}

class Runner {
 public:
  Runner(const Flags& f, std::ostream& out) : f_(f), out_(out) {}

  int resolve() {
    const auto mode = depres::mode_from_string(f_.mode.empty() ? "maven" : f_.mode);
    FindingsReport r;
    r.command = "resolve";
    r.resolution = resolve_with(mode, f_);
    if (!f_.baseline.empty()) {
      const auto base_mode = depres::mode_from_string(f_.baseline);
      r.comparison = BaselineComparison{
          base_mode, depres::compare(resolve_with(base_mode, f_), *r.resolution)};
      if (base_mode == depres::Mode::kDeclared) {
        r.notes.push_back("declared mode resolves direct dependencies only");
      }
    }
    if (!f_.write_lockfile.empty()) {
      formats::write_file(f_.write_lockfile,
                          formats::save_lockfile(depres::to_lockfile(*r.resolution)));
    }
    emit_report(r);
    return kExitOk;
  }

  int graph() {
    const auto in = graph_inputs(f_);
    const auto mode =
        remediate::graph_mode_from_string(f_.graph_mode.empty() ? "static-only" : f_.graph_mode);
    const auto graphs = pipeline::build_graphs(in);
    const auto& chosen = graphs.select(mode);
    const std::string graph_json =
        formats::save_graph({chosen.graph, chosen.entry_points});
    if (!f_.stats) {
      emit(graph_json);
      return kExitOk;
    }
    VulnDbDocument vulndb;
    if (!f_.vulndb.empty()) vulndb = formats::load_vulndb(formats::read_file(f_.vulndb));
    FindingsReport r;
    r.command = "graph";
    r.stats["static"] = pipeline::stats_of(graphs.static_only.graph, vulndb, nullptr);
    if (!in.traces.empty()) {
      r.stats["dynamic"] = pipeline::stats_of(graphs.dynamic_only.graph, vulndb, nullptr);
      r.stats["combined"] = pipeline::stats_of(graphs.combined.graph, vulndb, nullptr);
    }
    for (const auto& [k, v] : graphs.static_diagnostics.as_map()) {
      r.diagnostics["static." + k] = v;
    }
    r.diagnostics["entry_points"] =
        static_cast<std::int64_t>(graphs.static_only.entry_points.size());
    emit_report(r);
    return kExitOk;
  }

  int chains() {
    if (f_.programs.empty()) throw Error("at least one --program is required");
    if (f_.vulndb.empty()) throw Error("--vulndb is required");
    std::vector<ProgramDocument> libs;
    for (const auto& p : f_.programs) libs.push_back(load_program_file(p));
    const auto vulndb = formats::load_vulndb(formats::read_file(f_.vulndb));
    chains::ChainLimits limits{f_.max_chain_length, f_.max_chains_per_sink};
    const auto map = pipeline::build_origin_map(f_.framework_prefixes, library_rules(f_), {});
    const auto files = chains::precompute_all(libs, vulndb, limits, map);

    if (f_.out_dir.empty()) {
      if (files.size() != 1) {
        throw Error("several libraries need --out-dir");
      }
      emit(formats::save_chains(files.front()));
      return kExitOk;
    }
    fs::create_directories(f_.out_dir);
    FindingsReport r;
    r.command = "chains";
    for (const auto& file : files) {
      const std::string key = file.library.str();
      const std::string name = file.library.group + "_" + file.library.artifact + "_" +
                               file.library.version.str() + ".chains.json";
      formats::write_file(fs::path(f_.out_dir) / name, formats::save_chains(file));
      r.notes.push_back("wrote " + name);
      r.diagnostics[key + ".chains"] = static_cast<std::int64_t>(file.chains.size());
      r.diagnostics[key + ".truncated_sinks"] =
          static_cast<std::int64_t>(file.truncated_sinks.size());
      r.diagnostics[key + ".missing_sinks"] =
          static_cast<std::int64_t>(file.missing_sinks.size());
      r.diagnostics[key + ".unreachable_sinks"] =
          static_cast<std::int64_t>(file.unreachable_sinks.size());
      for (const auto& s : file.truncated_sinks) {
        r.notes.push_back("chain limits bound for " + key + " sink " + s.str());
      }
    }
    emit_report(r);
    return kExitOk;
  }

  int reach() {
    if (f_.vulndb.empty()) throw Error("--vulndb is required");
    pipeline::ReachInputs in;
    in.graphs = graph_inputs(f_);
    in.vulndb = formats::load_vulndb(formats::read_file(f_.vulndb));
    in.graph_mode =
        remediate::graph_mode_from_string(f_.graph_mode.empty() ? "combined" : f_.graph_mode);
    if (!f_.manifest.empty() || !f_.lockfile.empty()) {
      const std::string mode =
          !f_.mode.empty() ? f_.mode : (!f_.lockfile.empty() ? "lockfile" : "maven");
      in.resolution = resolve_with(depres::mode_from_string(mode), f_);
    }
    const auto r = pipeline::run_reach(in);
    emit_report(r);
    return f_.fail_on_findings && r.reachable_count() > 0 ? kExitFindings : kExitOk;
  }

  int remediate() {
    pipeline::RemediateInputs in;
    in.from = load_program_file(f_.from);
    in.to = load_program_file(f_.to);
    in.graph_mode =
        remediate::graph_mode_from_string(f_.graph_mode.empty() ? "combined" : f_.graph_mode);
    if (!f_.app_graph.empty()) {
      if (!f_.programs.empty()) throw Error("give either --app-graph or --program");
      auto doc = formats::load_graph(formats::read_file(f_.app_graph));
      in.app = std::move(doc.graph);
      in.entry_points = std::move(doc.entry_points);
      in.map = pipeline::build_origin_map(f_.framework_prefixes, library_rules(f_),
                                          load_chain_files(f_.chains));
    } else {
      const auto gin = graph_inputs(f_);
      const auto graphs = pipeline::build_graphs(gin);
      const auto& chosen = graphs.select(in.graph_mode);
      in.app = chosen.graph;
      in.entry_points = chosen.entry_points;
      in.map = gin.map;
    }
    const auto r = pipeline::run_remediate(in);
    emit_report(r);
    const bool breaking =
        r.breaking && r.breaking->verdict == remediate::Verdict::kPotentiallyBreaking;
    return f_.fail_on_findings && breaking ? kExitFindings : kExitOk;
  }

 private:
  void emit(const std::string& text) {
    if (f_.out.empty()) {
      out_ << text;
    } else {
      formats::write_file(f_.out, text);
    }
  }

  void emit_report(const FindingsReport& r) {
    emit(formats::emit_report(r, formats::report_format_from_string(f_.format)));
  }

  const Flags& f_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Software composition analysis: dependency resolution, call graphs, "
               "vulnerable-sink reachability and upgrade checks",
               "sca"};
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "TOML file with flag defaults")->envname("SCA_CONFIG");

  auto* resolve = app.add_subcommand("resolve", "Resolve dependencies");
  add_resolution_inputs(resolve, f);
  resolve->add_option("--mode", f.mode, "Resolution mode (default maven)")
      ->check(CLI::IsMember(kResolveModes));
  resolve->add_option("--baseline", f.baseline, "Also resolve in this mode and compare")
      ->check(CLI::IsMember(kResolveModes));
  resolve->add_option("--write-lockfile", f.write_lockfile,
                      "Record the resolution as a lockfile");
  add_format(resolve, f);

  auto* graph = app.add_subcommand("graph", "Build the application call graph");
  graph->add_option("--program", f.programs, "Application program document")
      ->check(CLI::ExistingFile);
  add_graph_inputs(graph, f);
  graph->add_option("--graph-mode", f.graph_mode, "Graph to emit (default static-only)")
      ->check(CLI::IsMember(kGraphModes));
  graph->add_option("--vulndb", f.vulndb, "Vulnerability database, for sink counts")
      ->check(CLI::ExistingFile);
  graph->add_flag("--stats", f.stats, "Print vertex, edge and sink counts");
  add_format(graph, f);

  auto* chains = app.add_subcommand("chains", "Precompute vulnerable call chains");
  chains->add_option("--program", f.programs, "Library program document (repeatable)")
      ->check(CLI::ExistingFile);
  chains->add_option("--vulndb", f.vulndb, "Vulnerability database")
      ->check(CLI::ExistingFile);
  chains->add_option("--max-chain-length", f.max_chain_length, "Maximum edges per chain")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  chains->add_option("--max-chains-per-sink", f.max_chains_per_sink,
                     "Maximum chains kept per sink")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  chains->add_option("--out-dir", f.out_dir, "Write one chain file per library here");
  add_origin_options(chains, f);
  add_format(chains, f);

  auto* reach = app.add_subcommand("reach", "Report reachable vulnerable sinks");
  reach->add_option("--program", f.programs, "Application program document")
      ->check(CLI::ExistingFile);
  add_graph_inputs(reach, f);
  add_resolution_inputs(reach, f);
  reach->add_option("--vulndb", f.vulndb, "Vulnerability database")
      ->check(CLI::ExistingFile);
  reach->add_option("--mode", f.mode, "Resolution mode")->check(CLI::IsMember(kResolveModes));
  reach->add_option("--graph-mode", f.graph_mode, "Graph to report on (default combined)")
      ->check(CLI::IsMember(kGraphModes));
  reach->add_flag("--fail-on-findings", f.fail_on_findings,
                  "Exit 1 when a sink is reachable");
  add_format(reach, f);

  auto* remediate = app.add_subcommand("remediate", "Check a library upgrade");
  remediate->add_option("--from", f.from, "Current library version")
      ->required()
      ->check(CLI::ExistingFile);
  remediate->add_option("--to", f.to, "Candidate library version")
      ->required()
      ->check(CLI::ExistingFile);
  remediate->add_option("--app-graph", f.app_graph, "Application graph document")
      ->check(CLI::ExistingFile);
  remediate->add_option("--program", f.programs, "Application program document")
      ->check(CLI::ExistingFile);
  add_graph_inputs(remediate, f);
  remediate->add_option("--graph-mode,--mode", f.graph_mode,
                        "Application graph to check against (default combined)")
      ->check(CLI::IsMember(kGraphModes));
  remediate->add_flag("--fail-on-findings", f.fail_on_findings,
                      "Exit 1 when the upgrade is potentially breaking");
  add_format(remediate, f);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("sca");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    Runner runner(f, out);
    if (resolve->parsed()) return runner.resolve();
    if (graph->parsed()) return runner.graph();
    if (chains->parsed()) return runner.chains();
    if (reach->parsed()) return runner.reach();
    return runner.remediate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace sca::cli
