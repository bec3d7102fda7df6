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
#include <set>
#include <vector>

#include "sca/call_graph.hpp"
#include "sca/documents.hpp"
#include "sca/origin.hpp"
#include "sca/program.hpp"

/// Per-library precomputation of vulnerable-method call chains. A library
/// version is analyzed in isolation, with no knowledge of the applications
/// that will use it, so chain files can be cached and shipped.
namespace sca::chains {

struct ChainLimits {
  /// Maximum number of edges in a chain.
  std::size_t max_length = 16;
  std::size_t max_chains_per_sink = 1000;

  /// Throws Error if either limit is zero.
  void validate() const;
};

/// The externally callable methods of a library: its public methods.
struct LibrarySurface {
  std::set<MethodRef> entry_points;

  static LibrarySurface of(const ProgramDocument& lib);
};

/// CHA-expanded static graph over the library's own classes. No RTA: there
/// is no usage context to seed it with.
CallGraph library_graph(const ProgramDocument& lib, const OriginMap& map = {});

/// Simple paths from surface entry points to each sink, at most
/// `limits.max_length` edges, in canonical order (sink, then entry, then
/// vertex sequence). A sink lands in `truncated_sinks` when either limit
/// hid at least one path, in `missing_sinks` when the library does not
/// declare it, and in `unreachable_sinks` when no public method reaches it.
ChainFile enumerate_chains(const CallGraph& graph, const LibrarySurface& surface,
                           const std::vector<MethodRef>& sinks,
                           const ChainLimits& limits, const Coordinate& library);

/// Sinks of every vulnerability record affecting this library version.
std::vector<MethodRef> sinks_for(const VulnDbDocument& vulndb,
                                 const Coordinate& library);

/// library_graph + LibrarySurface::of + enumerate_chains for one library.
ChainFile precompute(const ProgramDocument& lib, const VulnDbDocument& vulndb,
                     const ChainLimits& limits, const OriginMap& map = {});

/// Runs `precompute` for every library concurrently. Results are in input
/// order.
std::vector<ChainFile> precompute_all(const std::vector<ProgramDocument>& libs,
                                      const VulnDbDocument& vulndb,
                                      const ChainLimits& limits,
                                      const OriginMap& map = {});

}  // namespace sca::chains
