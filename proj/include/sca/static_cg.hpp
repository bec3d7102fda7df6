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

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sca/call_graph.hpp"
#include "sca/origin.hpp"
#include "sca/program.hpp"

/// Static call graph construction for one program document:
///
///   init_edges -> apply_cha -> apply_rta -> apply_reflection
///     -> compute_entry_points -> prune to what the entry points reach
///
/// Every pass is a pure function returning a new graph. Edge sets are
/// monotone across the pipeline: init is a subset of CHA, RTA is a subset of
/// CHA, and reflection only adds.
namespace sca::static_cg {

/// Subtype relation and method dispatch over the classes declared in one
/// document. Supertypes that the document does not declare are external:
/// they are leaves with no known members.
///
/// Holds pointers into the document; it must not outlive it.
class HierarchyIndex {
 public:
  /// Throws AnalysisError listing the classes of an inheritance cycle.
  static HierarchyIndex build(const ProgramDocument& program);

  bool is_declared(std::string_view cls) const;
  /// Declared and not abstract.
  bool is_concrete(std::string_view cls) const;

  const std::set<std::string>& direct_subtypes(std::string_view cls) const;
  /// `cls` plus every transitive subtype (through superclass and interface
  /// links).
  std::set<std::string> cone(std::string_view cls) const;
  /// Superclass chain starting at `cls`; may end in an external name.
  const std::vector<std::string>& superclass_chain(std::string_view cls) const;
  const std::set<std::string>& external_types() const { return external_; }

  /// The method a receiver of runtime class `cls` runs for (name,
  /// descriptor): its own declaration, else the nearest superclass
  /// declaration, else the external superclass that ends the chain, else
  /// the first interface declaration found breadth-first. nullopt when
  /// nothing matches.
  std::optional<MethodRef> resolve(std::string_view cls, std::string_view name,
                                   std::string_view descriptor) const;

 private:
  struct ClassInfo {
    const ClassModel* model = nullptr;
    std::vector<std::string> chain;
  };

  std::map<std::string, ClassInfo, std::less<>> classes_;
  std::map<std::string, std::set<std::string>, std::less<>> subtypes_;
  std::set<std::string> external_;
};

/// Per-pass edge and vertex counters. Exported in machine reports.
struct Diagnostics {
  std::int64_t init_edges = 0;
  std::int64_t init_unresolved = 0;
  std::int64_t cha_added = 0;
  std::int64_t cha_unresolved = 0;
  std::int64_t rta_removed = 0;
  std::int64_t rta_instantiated = 0;
  std::int64_t reflection_added = 0;
  std::int64_t reflection_unresolved = 0;
  std::int64_t pruned_vertices = 0;
  std::int64_t pruned_edges = 0;

  std::map<std::string, std::int64_t> as_map() const;
};

/// Origin given to methods declared by `program`: first-party for an
/// application, third-party(coordinate) for a library.
Origin own_origin(const ProgramDocument& program);

/// Initial edges: one per direct call site, and one per virtual call site
/// resolved against the declared receiver type only. Vertices are all
/// declared methods plus every call target; targets outside the document
/// are classified with `map` and default to third-party.
CallGraph init_edges(const ProgramDocument& program, const HierarchyIndex& hierarchy,
                     const OriginMap& map, Diagnostics* diag = nullptr);

/// Class hierarchy analysis: for every virtual call site, adds an edge to
/// the implementation each concrete class in the declared receiver's cone
/// dispatches to. External receivers keep only their declared edge.
CallGraph apply_cha(const CallGraph& graph, const ProgramDocument& program,
                    const HierarchyIndex& hierarchy, const OriginMap& map,
                    Diagnostics* diag = nullptr);

struct RtaOptions {
  /// When set, the worklist is drained in a pseudo-random order derived
  /// from this seed. The result is identical for every order.
  std::optional<std::uint64_t> shuffle_seed;
};

struct RtaResult {
  CallGraph graph;
  std::set<std::string> instantiated;
};

/// Rapid type analysis. Computes the classes instantiated by methods
/// reachable from `seeds` (worklist to fixpoint), then keeps a CHA edge
/// only if a direct call justifies it, its target lies outside the
/// document, or some instantiated class in a virtual site's cone dispatches
/// to it. Pure pruning: output edges are a subset of input edges.
RtaResult apply_rta(const CallGraph& graph, const ProgramDocument& program,
                    const HierarchyIndex& hierarchy, const EntryPointSet& seeds,
                    const RtaOptions& options = {}, Diagnostics* diag = nullptr);

/// Adds an edge for every reflective site whose class and method constants
/// are both known, to every overload of that method declared in the
/// document.
CallGraph apply_reflection(const CallGraph& graph, const ProgramDocument& program,
                           Diagnostics* diag = nullptr);

struct EntryPointFilter {
  /// Keep only entry points with this method name (e.g. "main").
  std::optional<std::string> method_name;
};

/// First-party vertices with no callers, optionally filtered. Throws
/// AnalysisError when the result is empty.
EntryPointSet compute_entry_points(const CallGraph& graph,
                                   const EntryPointFilter& filter = {});

struct StaticConfig {
  EntryPointFilter entry_filter;
  RtaOptions rta;
};

struct StaticBuild {
  CallGraph graph;
  EntryPointSet entry_points;
  std::set<std::string> instantiated;
  Diagnostics diagnostics;
};

/// Runs the full pipeline and prunes every vertex the entry points do not
/// reach, so that sink reachability reduces to vertex membership.
StaticBuild build_static(const ProgramDocument& program, const OriginMap& map,
                         const StaticConfig& config = {});

}  // namespace sca::static_cg
