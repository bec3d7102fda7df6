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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sca/call_chain.hpp"
#include "sca/call_graph.hpp"
#include "sca/depres.hpp"
#include "sca/documents.hpp"

namespace sca::compose {

/// Adds the suffix of `chain` starting at the first edge whose caller is
/// already a vertex of `g`. Suffix edges carry chain provenance; new
/// vertices are third-party of the chain's library. Without such an edge
/// `g` is returned unchanged.
///
/// Every added vertex gets an incoming edge, so no new zero-in-degree
/// vertices (third-party entry points) ever appear.
CallGraph merge_chain(const CallGraph& g, const CallChain& chain);

enum class MergeMode {
  /// One pass over the chains in file order, then chain order.
  kFold,
  /// Repeat passes until nothing changes, so a chain anchored on a vertex
  /// added by a later chain still merges.
  kFixpoint,
};

std::string_view to_string(MergeMode mode);
MergeMode merge_mode_from_string(std::string_view text);

struct MergeDiagnostics {
  std::size_t chains = 0;
  std::size_t chains_merged = 0;
  std::size_t vertices_added = 0;
  std::size_t edges_added = 0;
  std::size_t passes = 0;
  /// Vertices the fixpoint would add that a single fold does not. Always
  /// computed, whichever mode ran.
  std::vector<MethodRef> fold_fixpoint_difference;
};

struct MergeResult {
  CallGraph graph;
  MergeDiagnostics diagnostics;
};

MergeResult merge_chains(const CallGraph& g, const std::vector<ChainFile>& files,
                         MergeMode mode = MergeMode::kFold);

/// Vertex and edge union; provenances of shared edges are combined. When
/// the graphs disagree about a vertex's origin the higher-ranked origin
/// wins, which keeps the operation commutative.
CallGraph union_graphs(const CallGraph& a, const CallGraph& b);

enum class FindingProvenance { kStatic, kDynamic, kBoth };

std::string_view to_string(FindingProvenance p);

struct Finding {
  std::string vuln_id;
  /// Resolved coordinates the advisory applies to; empty when no
  /// resolution was supplied.
  std::vector<Coordinate> libraries;
  MethodRef sink;
  bool reachable = false;
  std::optional<FindingProvenance> provenance;
  std::optional<std::vector<MethodRef>> witness;
};

/// Shortest entry-point-to-sink path (ties: lexicographically smallest
/// vertex sequence). Throws AnalysisError if the sink is not a vertex or no
/// entry point reaches it.
std::vector<MethodRef> witness(const CallGraph& gc, const EntryPointSet& entry_points,
                               const MethodRef& sink);

/// Static when every witness edge has static or chain provenance,
/// dynamic when every edge is dynamic, both otherwise.
FindingProvenance witness_provenance(const CallGraph& gc,
                                     const std::vector<MethodRef>& path);

/// One finding per (advisory, sink) whose package has a resolved version
/// inside the affected range, ordered by id then sink. Reachability is
/// vertex membership. With `resolved == nullptr` every advisory applies.
std::vector<Finding> reachable_sinks(const CallGraph& gc,
                                     const EntryPointSet& entry_points,
                                     const VulnDbDocument& vulndb,
                                     const depres::ResolutionResult* resolved);

}  // namespace sca::compose
