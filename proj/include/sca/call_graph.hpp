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

#include "sca/method_ref.hpp"
#include "sca/origin.hpp"

namespace sca {

enum class Provenance : std::uint8_t {
  kStatic = 1,
  kDynamic = 2,
  kChain = 4,
};

std::string_view to_string(Provenance p);
Provenance provenance_from_string(std::string_view text);

/// Set of provenances carried by one (caller, callee) pair. An edge present
/// in both a static and a dynamic graph carries both.
class ProvenanceSet {
 public:
  constexpr ProvenanceSet() = default;
  constexpr ProvenanceSet(Provenance p)  // NOLINT(google-explicit-constructor)
      : bits_(static_cast<std::uint8_t>(p)) {}

  constexpr bool contains(Provenance p) const {
    return (bits_ & static_cast<std::uint8_t>(p)) != 0;
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr ProvenanceSet& operator|=(ProvenanceSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend constexpr ProvenanceSet operator|(ProvenanceSet a, ProvenanceSet b) {
    return a |= b;
  }
  friend constexpr bool operator==(ProvenanceSet, ProvenanceSet) = default;

  /// Members in enum order.
  std::vector<Provenance> members() const;

 private:
  std::uint8_t bits_ = 0;
};

struct Edge {
  MethodRef caller;
  MethodRef callee;
  ProvenanceSet provenance;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphBuilder;

/// Call graph over MethodRefs. Vertices carry an Origin; each (caller,
/// callee) pair carries a ProvenanceSet.
///
/// A CallGraph is an immutable value. Passes construct new graphs through
/// GraphBuilder, which enforces that every edge endpoint is a vertex.
/// All iteration is in canonical ref order.
class CallGraph {
 public:
  using Successors = std::map<MethodRef, ProvenanceSet>;

  CallGraph() = default;

  const std::map<MethodRef, Origin>& vertices() const { return vertices_; }
  bool has_vertex(const MethodRef& ref) const { return vertices_.contains(ref); }
  const Origin* origin(const MethodRef& ref) const;

  const Successors& successors(const MethodRef& ref) const;
  const std::set<MethodRef>& predecessors(const MethodRef& ref) const;
  std::size_t in_degree(const MethodRef& ref) const {
    return predecessors(ref).size();
  }
  std::size_t out_degree(const MethodRef& ref) const {
    return successors(ref).size();
  }

  bool has_edge(const MethodRef& caller, const MethodRef& callee) const;
  std::optional<ProvenanceSet> edge_provenance(const MethodRef& caller,
                                               const MethodRef& callee) const;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return vertices_.empty(); }

  /// Every edge, ordered by (caller, callee).
  std::vector<Edge> edges() const;

  friend bool operator==(const CallGraph& a, const CallGraph& b) {
    return a.vertices_ == b.vertices_ && a.out_ == b.out_;
  }

 private:
  friend class GraphBuilder;

  std::map<MethodRef, Origin> vertices_;
  std::map<MethodRef, Successors> out_;
  std::map<MethodRef, std::set<MethodRef>> in_;
  std::size_t edge_count_ = 0;
};

/// Mutable staging area for a CallGraph.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(CallGraph base) : graph_(std::move(base)) {}

  /// Inserts the vertex if absent. An existing vertex keeps its origin.
  /// Returns true if the vertex was inserted.
  bool add_vertex(const MethodRef& ref, const Origin& origin);
  void set_origin(const MethodRef& ref, const Origin& origin);

  /// Adds (or widens the provenance of) an edge. Both endpoints must already
  /// be vertices. Returns true if the pair was not present before.
  bool add_edge(const MethodRef& caller, const MethodRef& callee,
                ProvenanceSet provenance);
  bool remove_edge(const MethodRef& caller, const MethodRef& callee);
  /// Removes the vertex and every incident edge.
  bool remove_vertex(const MethodRef& ref);

  const CallGraph& view() const { return graph_; }
  CallGraph build() && { return std::move(graph_); }

 private:
  CallGraph graph_;
};

/// Set of first-party methods with no callers in the graph they were
/// computed from.
struct EntryPointSet {
  std::set<MethodRef> methods;

  bool contains(const MethodRef& ref) const { return methods.contains(ref); }
  bool empty() const { return methods.empty(); }
  std::size_t size() const { return methods.size(); }
  friend bool operator==(const EntryPointSet&, const EntryPointSet&) = default;
};

/// First-party vertices with in-degree zero.
EntryPointSet first_party_roots(const CallGraph& g);

/// Vertices reachable from `roots` (roots included when they are vertices).
std::set<MethodRef> reachable_from(const CallGraph& g,
                                   const std::set<MethodRef>& roots);

/// Shortest path from any source to `target`, breadth-first. Among equally
/// short paths the lexicographically smallest vertex sequence wins. Returns
/// nullopt when no source reaches the target.
std::optional<std::vector<MethodRef>> shortest_path(
    const CallGraph& g, const std::set<MethodRef>& sources,
    const MethodRef& target);

/// Subgraph induced by `keep`, preserving origins and provenances.
CallGraph induced_subgraph(const CallGraph& g, const std::set<MethodRef>& keep);

}  // namespace sca
