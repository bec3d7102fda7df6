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

#include "sca/pipeline.hpp"

#include "sca/chains.hpp"
#include "sca/dynamic_cg.hpp"

namespace sca::pipeline {

OriginMap build_origin_map(const std::vector<std::string>& frameworks,
                           const std::vector<std::pair<std::string, Coordinate>>& libraries,
                           const std::vector<ChainFile>& chains) {
  OriginMap map = OriginMap::with_default_frameworks();
  for (const auto& p : frameworks) map.add_framework(p);
  for (const auto& [prefix, coord] : libraries) {
    map.add_rule(prefix, Origin::third_party(coord));
  }
  std::set<std::string> seen;
  for (const auto& file : chains) {
    for (const auto& chain : file.chains) {
      for (const auto& v : chain.vertices()) {
        std::string cls(v.class_name());
        if (seen.insert(cls).second) {
          map.add_rule(cls + ".", Origin::third_party(file.library));
        }
      }
    }
  }
  return map;
}

const AppGraph& AppGraphs::select(remediate::GraphMode mode) const {
  switch (mode) {
    case remediate::GraphMode::kStaticOnly:
      return static_only;
    case remediate::GraphMode::kDynamicOnly:
      return dynamic_only;
    case remediate::GraphMode::kCombined:
      break;
  }
  return combined;
}

AppGraphs build_graphs(const GraphInputs& in) {
  AppGraphs out;
  auto sb = static_cg::build_static(in.app, in.map, in.config);
  out.static_diagnostics = sb.diagnostics;

  const CallGraph traced = dynamic_cg::ingest_traces(in.traces, in.map);
  for (const auto& t : in.traces) out.trace_events += t.events.size();
  const auto entries = dynamic_cg::framework_entries(traced);
  out.framework_entries = entries.size();
  const CallGraph projected = dynamic_cg::project(traced, entries);
  const EntryPointSet dynamic_entries = dynamic_cg::entry_callees(entries);

  auto merged = [&](const CallGraph& g, EntryPointSet eps) {
    auto m = compose::merge_chains(g, in.chains, in.merge_mode);
    return AppGraph{std::move(m.graph), std::move(eps), std::move(m.diagnostics)};
  };
  EntryPointSet combined_entries = sb.entry_points;
  combined_entries.methods.insert(dynamic_entries.methods.begin(),
                                  dynamic_entries.methods.end());
  out.combined = merged(compose::union_graphs(sb.graph, projected), combined_entries);
  out.static_only = merged(sb.graph, sb.entry_points);
  out.dynamic_only = merged(projected, dynamic_entries);
  return out;
}

std::set<MethodRef> present_sinks(const CallGraph& g, const VulnDbDocument& vulndb,
                                  const depres::ResolutionResult* resolved) {
  std::set<MethodRef> out;
  for (const auto& f : compose::reachable_sinks(g, {}, vulndb, resolved)) {
    if (f.reachable) out.insert(f.sink);
  }
  return out;
}

GraphStats stats_of(const CallGraph& g, const VulnDbDocument& vulndb,
                    const depres::ResolutionResult* resolved) {
  return GraphStats{g.vertex_count(), g.edge_count(),
                    present_sinks(g, vulndb, resolved).size()};
}

namespace {

void add_merge_diagnostics(FindingsReport& r, const compose::MergeDiagnostics& d) {
  r.diagnostics["merge.chains"] = static_cast<std::int64_t>(d.chains);
  r.diagnostics["merge.chains_merged"] = static_cast<std::int64_t>(d.chains_merged);
  r.diagnostics["merge.vertices_added"] = static_cast<std::int64_t>(d.vertices_added);
  r.diagnostics["merge.edges_added"] = static_cast<std::int64_t>(d.edges_added);
  r.diagnostics["merge.passes"] = static_cast<std::int64_t>(d.passes);
  r.diagnostics["merge.fold_fixpoint_difference"] =
      static_cast<std::int64_t>(d.fold_fixpoint_difference.size());
  if (!d.fold_fixpoint_difference.empty()) {
    std::string msg = "a fixpoint merge would also add:";
    for (const auto& v : d.fold_fixpoint_difference) msg += " " + v.str();
    r.notes.push_back(std::move(msg));
  }
}

}  // namespace

FindingsReport run_reach(const ReachInputs& in) {
  const AppGraphs graphs = build_graphs(in.graphs);
  const auto* resolved = in.resolution ? &*in.resolution : nullptr;
  const AppGraph& chosen = graphs.select(in.graph_mode);

  FindingsReport r;
  r.command = "reach";
  r.findings = compose::reachable_sinks(chosen.graph, chosen.entry_points,
                                        in.vulndb, resolved);
  r.resolution = in.resolution;
  r.stats["static"] = stats_of(graphs.static_only.graph, in.vulndb, resolved);
  r.stats["dynamic"] = stats_of(graphs.dynamic_only.graph, in.vulndb, resolved);
  r.stats["combined"] = stats_of(graphs.combined.graph, in.vulndb, resolved);
  for (const auto& [k, v] : graphs.static_diagnostics.as_map()) {
    r.diagnostics["static." + k] = v;
  }
  r.diagnostics["dynamic.trace_events"] = static_cast<std::int64_t>(graphs.trace_events);
  r.diagnostics["dynamic.framework_entries"] =
      static_cast<std::int64_t>(graphs.framework_entries);
  r.diagnostics["entry_points"] =
      static_cast<std::int64_t>(chosen.entry_points.size());
  add_merge_diagnostics(r, chosen.merge);
  r.notes.push_back("graph mode: " + std::string(remediate::to_string(in.graph_mode)));
  r.notes.push_back("merge mode: " +
                    std::string(compose::to_string(in.graphs.merge_mode)));
  if (in.resolution && in.resolution->mode == depres::Mode::kDeclared) {
    r.notes.push_back("declared mode resolves direct dependencies only");
  }
  return r;
}

std::set<MethodRef> reachable_sink_set(const FindingsReport& report) {
  std::set<MethodRef> out;
  for (const auto& f : report.findings) {
    if (f.reachable) out.insert(f.sink);
  }
  return out;
}

FindingsReport run_remediate(const RemediateInputs& in) {
  const auto diff = remediate::diff_versions(in.from, in.to);
  const CallGraph v1graph = chains::library_graph(in.from, in.map);
  auto sem = remediate::semantic_closure(diff, v1graph);
  auto breaking = remediate::check_breaking(in.app, in.entry_points, sem, in.graph_mode);

  FindingsReport r;
  r.command = "remediate";
  r.stats["application"] = GraphStats{in.app.vertex_count(), in.app.edge_count(), 0};
  r.diagnostics["diff.added"] = static_cast<std::int64_t>(diff.added.size());
  r.diagnostics["diff.removed"] = static_cast<std::int64_t>(diff.removed.size());
  r.diagnostics["diff.body_changed"] = static_cast<std::int64_t>(diff.body_changed.size());
  r.diagnostics["diff.closure"] = static_cast<std::int64_t>(sem.changed_closure.size());
  r.diagnostics["risky"] = static_cast<std::int64_t>(breaking.risky.size());
  r.semantic_diff = std::move(sem);
  r.breaking = std::move(breaking);
  return r;
}

}  // namespace sca::pipeline
