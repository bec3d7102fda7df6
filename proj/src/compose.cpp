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

#include "sca/compose.hpp"

#include <algorithm>

#include "sca/error.hpp"

namespace sca::compose {

namespace {

/// Index of the first chain edge anchored in `g`.
std::optional<std::size_t> anchor(const CallGraph& g, const CallChain& chain) {
  const auto& edges = chain.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (g.has_vertex(edges[i].caller)) return i;
  }
  return std::nullopt;
}

/// Merges into `b`; returns true if the graph changed.
bool merge_into(GraphBuilder& b, const CallChain& chain, MergeDiagnostics* diag) {
  auto start = anchor(b.view(), chain);
  if (!start) return false;
  const Origin lib = Origin::third_party(chain.library());
  bool changed = false;
  const auto& edges = chain.edges();
  for (std::size_t i = *start; i < edges.size(); ++i) {
    if (b.add_vertex(edges[i].callee, lib)) {
      changed = true;
      if (diag != nullptr) ++diag->vertices_added;
    }
    const auto before = b.view().edge_provenance(edges[i].caller, edges[i].callee);
    b.add_edge(edges[i].caller, edges[i].callee, Provenance::kChain);
    if (!before) {
      changed = true;
      if (diag != nullptr) ++diag->edges_added;
    } else if (!before->contains(Provenance::kChain)) {
      changed = true;
    }
  }
  return changed;
}

bool fold_pass(GraphBuilder& b, const std::vector<ChainFile>& files,
               MergeDiagnostics* diag) {
  bool changed = false;
  for (const auto& f : files) {
    for (const auto& c : f.chains) {
      if (merge_into(b, c, diag)) {
        changed = true;
        if (diag != nullptr) ++diag->chains_merged;
      }
    }
  }
  return changed;
}

}  // namespace

CallGraph merge_chain(const CallGraph& g, const CallChain& chain) {
  if (!anchor(g, chain)) return g;
  GraphBuilder b(g);
  merge_into(b, chain, nullptr);
  return std::move(b).build();
}

std::string_view to_string(MergeMode mode) {
  return mode == MergeMode::kFold ? "fold" : "fixpoint";
}

MergeMode merge_mode_from_string(std::string_view text) {
  if (text == "fold") return MergeMode::kFold;
  if (text == "fixpoint") return MergeMode::kFixpoint;
  throw ParseError("unknown merge mode '" + std::string(text) + "'");
}

MergeResult merge_chains(const CallGraph& g, const std::vector<ChainFile>& files,
                         MergeMode mode) {
  MergeResult out;
  auto& diag = out.diagnostics;
  for (const auto& f : files) diag.chains += f.chains.size();

  GraphBuilder fold(g);
  fold_pass(fold, files, mode == MergeMode::kFold ? &diag : nullptr);
  CallGraph folded = std::move(fold).build();

  GraphBuilder fix(g);
  std::size_t passes = 0;
  MergeDiagnostics fix_diag;
  while (true) {
    ++passes;
    MergeDiagnostics pass_diag;
    const bool changed = fold_pass(fix, files, &pass_diag);
    fix_diag.vertices_added += pass_diag.vertices_added;
    fix_diag.edges_added += pass_diag.edges_added;
    // A chain that merges in several passes is counted once per pass; keep
    // the first pass's count as the merged-chain figure.
    if (passes == 1) fix_diag.chains_merged = pass_diag.chains_merged;
    if (!changed) break;
  }
  CallGraph fixed = std::move(fix).build();

  for (const auto& [v, _] : fixed.vertices()) {
    if (!folded.has_vertex(v)) diag.fold_fixpoint_difference.push_back(v);
  }
  if (mode == MergeMode::kFold) {
    diag.passes = 1;
    out.graph = std::move(folded);
  } else {
    diag.passes = passes;
    diag.vertices_added = fix_diag.vertices_added;
    diag.edges_added = fix_diag.edges_added;
    diag.chains_merged = fix_diag.chains_merged;
    out.graph = std::move(fixed);
  }
  return out;
}

CallGraph union_graphs(const CallGraph& a, const CallGraph& b) {
  GraphBuilder out(a);
  for (const auto& [v, origin] : b.vertices()) {
    if (!out.add_vertex(v, origin)) {
      if (outranks(origin, *out.view().origin(v))) out.set_origin(v, origin);
    }
  }
  for (const auto& e : b.edges()) out.add_edge(e.caller, e.callee, e.provenance);
  return std::move(out).build();
}

std::string_view to_string(FindingProvenance p) {
  switch (p) {
    case FindingProvenance::kStatic:
      return "static";
    case FindingProvenance::kDynamic:
      return "dynamic";
    case FindingProvenance::kBoth:
      return "both";
  }
  return "";
}

std::vector<MethodRef> witness(const CallGraph& gc, const EntryPointSet& entry_points,
                               const MethodRef& sink) {
  if (!gc.has_vertex(sink)) {
    throw AnalysisError("witness requested for " + sink.str() +
                        ", which is not in the graph");
  }
  auto path = shortest_path(gc, entry_points.methods, sink);
  if (!path) {
    throw AnalysisError("no entry point reaches " + sink.str());
  }
  return std::move(*path);
}

FindingProvenance witness_provenance(const CallGraph& gc,
                                     const std::vector<MethodRef>& path) {
  bool all_static = true;
  bool all_dynamic = true;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto p = gc.edge_provenance(path[i], path[i + 1]).value_or(ProvenanceSet{});
    if (!p.contains(Provenance::kStatic) && !p.contains(Provenance::kChain)) {
      all_static = false;
    }
    if (!p.contains(Provenance::kDynamic)) all_dynamic = false;
  }
  if (all_static && !all_dynamic) return FindingProvenance::kStatic;
  if (all_dynamic && !all_static) return FindingProvenance::kDynamic;
  return FindingProvenance::kBoth;
}

std::vector<Finding> reachable_sinks(const CallGraph& gc,
                                     const EntryPointSet& entry_points,
                                     const VulnDbDocument& vulndb,
                                     const depres::ResolutionResult* resolved) {
  std::vector<const VulnRecord*> records;
  for (const auto& r : vulndb.records) records.push_back(&r);
  std::sort(records.begin(), records.end(),
            [](const VulnRecord* a, const VulnRecord* b) { return a->id < b->id; });

  std::vector<Finding> out;
  for (const VulnRecord* rec : records) {
    std::vector<Coordinate> libraries;
    if (resolved != nullptr) {
      for (const auto& c : resolved->versions_of(rec->package)) {
        if (rec->affected.satisfied_by(c.version)) libraries.push_back(c);
      }
      if (libraries.empty()) continue;
    }
    const std::set<MethodRef> sinks(rec->sinks.begin(), rec->sinks.end());
    for (const auto& sink : sinks) {
      Finding f{rec->id, libraries, sink, gc.has_vertex(sink), {}, {}};
      if (f.reachable) {
        if (auto path = shortest_path(gc, entry_points.methods, sink)) {
          f.provenance = witness_provenance(gc, *path);
          f.witness = std::move(*path);
        }
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace sca::compose
