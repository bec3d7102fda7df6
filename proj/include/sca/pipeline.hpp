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

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sca/call_graph.hpp"
#include "sca/compose.hpp"
#include "sca/depres.hpp"
#include "sca/documents.hpp"
#include "sca/origin.hpp"
#include "sca/program.hpp"
#include "sca/remediate.hpp"
#include "sca/report.hpp"
#include "sca/static_cg.hpp"

/// End-to-end orchestration: static graph, dynamic projection, union,
/// chain merging, and the reports built on top of them.
namespace sca::pipeline {

/// Default framework prefixes, then `frameworks`, then explicit
/// `libraries` (prefix, coordinate) rules, then one rule per class that
/// appears in a chain, mapped to the chain's library.
OriginMap build_origin_map(const std::vector<std::string>& frameworks,
                           const std::vector<std::pair<std::string, Coordinate>>& libraries,
                           const std::vector<ChainFile>& chains);

struct GraphInputs {
  ProgramDocument app;
  std::vector<TraceDocument> traces;
  std::vector<ChainFile> chains;
  OriginMap map;
  static_cg::StaticConfig config;
  compose::MergeMode merge_mode = compose::MergeMode::kFold;
};

struct AppGraph {
  CallGraph graph;
  EntryPointSet entry_points;
  compose::MergeDiagnostics merge;
};

/// The three application graphs, each with chains merged in.
struct AppGraphs {
  AppGraph static_only;
  AppGraph dynamic_only;
  AppGraph combined;
  static_cg::Diagnostics static_diagnostics;
  std::size_t trace_events = 0;
  std::size_t framework_entries = 0;

  const AppGraph& select(remediate::GraphMode mode) const;
};

AppGraphs build_graphs(const GraphInputs& in);

/// Distinct sinks of applicable advisories that are vertices of `g`.
std::set<MethodRef> present_sinks(const CallGraph& g, const VulnDbDocument& vulndb,
                                  const depres::ResolutionResult* resolved);

GraphStats stats_of(const CallGraph& g, const VulnDbDocument& vulndb,
                    const depres::ResolutionResult* resolved);

struct ReachInputs {
  GraphInputs graphs;
  VulnDbDocument vulndb;
  std::optional<depres::ResolutionResult> resolution;
  remediate::GraphMode graph_mode = remediate::GraphMode::kCombined;
};

FindingsReport run_reach(const ReachInputs& in);

/// Reachable sinks of `graph_mode`'s graph.
std::set<MethodRef> reachable_sink_set(const FindingsReport& report);

struct RemediateInputs {
  ProgramDocument from;
  ProgramDocument to;
  CallGraph app;
  EntryPointSet entry_points;
  remediate::GraphMode graph_mode = remediate::GraphMode::kCombined;
  OriginMap map;
};

FindingsReport run_remediate(const RemediateInputs& in);

}  // namespace sca::pipeline
