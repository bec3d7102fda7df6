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
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sca/call_graph.hpp"
#include "sca/documents.hpp"
#include "sca/program.hpp"

namespace sca::testing {

using Rng = std::mt19937_64;

std::filesystem::path fixture_dir();
std::filesystem::path fixture(const std::string& relative);
std::string read_fixture(const std::string& relative);

MethodRef ref(const std::string& text);
inline MethodRef ref(std::string&& text) { return ref(static_cast<const std::string&>(text)); }
std::set<MethodRef> refs(std::initializer_list<const char*> texts);
std::set<MethodRef> vertex_set(const CallGraph& g);
std::set<std::pair<MethodRef, MethodRef>> edge_set(const CallGraph& g);

// ---------------------------------------------------------------------------
// Generators

/// Application-style graph: first-party roots (in-degree 0), first-party
/// internal methods each with at least one caller, and third-party leaves.
/// Every vertex is reachable from a root.
struct RandomAppGraph {
  CallGraph graph;
  EntryPointSet roots;
  /// Third-party vertices: candidate chain anchors.
  std::vector<MethodRef> library_vertices;
};
RandomAppGraph random_app_graph(Rng& rng, std::size_t max_vertices);

/// Chains through library namespaces. Callers are drawn from existing
/// library vertices and fresh ones; chains are simple paths.
std::vector<ChainFile> random_chain_files(Rng& rng, const RandomAppGraph& app,
                                          std::size_t max_new_vertices);

/// Arbitrary digraph on `n` vertices named `g.N.mK()V`, all first-party.
CallGraph random_digraph(Rng& rng, std::size_t n, double edge_probability);

/// Hierarchy of at most `max_classes` classes with virtual, direct and
/// instantiation sites, plus a static `p.Main.main()V`.
ProgramDocument random_hierarchy_program(Rng& rng, std::size_t max_classes);

/// Library document whose call graph has at most `max_methods` methods.
ProgramDocument random_library_program(Rng& rng, std::size_t max_methods);

/// Registry of at most `max_packages` packages with up to `max_versions`
/// versions each, plus a manifest over it. Every dependency names a
/// package in the registry.
std::pair<RegistryDocument, ManifestDocument> random_registry(Rng& rng,
                                                              std::size_t max_packages,
                                                              std::size_t max_versions);

// ---------------------------------------------------------------------------
// Oracles

/// Vertices reachable from `roots` by plain recursive DFS.
std::set<MethodRef> dfs_reachable(const CallGraph& g, const std::set<MethodRef>& roots);

/// (caller, callee) pairs CHA must produce: declared-receiver edges, direct
/// edges, and every concrete subtype's dispatch target, computed from an
/// explicitly closed subtype relation.
std::set<std::pair<MethodRef, MethodRef>> brute_force_cha(const ProgramDocument& p);

/// Every simple path (as a vertex list, at least one edge) from any of
/// `entries` to `sink`, with no length bound.
std::set<std::vector<MethodRef>> brute_force_simple_paths(
    const CallGraph& g, const std::set<MethodRef>& entries, const MethodRef& sink);

/// Nearest-wins resolution computed level by level: the occurrences at
/// depth d+1 are the dependencies of the winning occurrences at depth d.
/// nullopt when a package is missing from the registry.
std::optional<std::map<PackageKey, Version>> maven_oracle(const ManifestDocument& m,
                                                          const RegistryDocument& r);

/// Methods from which some seed is reachable, one forward DFS per vertex.
std::set<MethodRef> closure_oracle(const CallGraph& g, const std::set<MethodRef>& seeds);

}  // namespace sca::testing
