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

#include "sca/chains.hpp"

#include <future>

#include "sca/error.hpp"
#include "sca/static_cg.hpp"

namespace sca::chains {

void ChainLimits::validate() const {
  if (max_length < 1) throw Error("max chain length must be at least 1");
  if (max_chains_per_sink < 1) throw Error("max chains per sink must be at least 1");
}

LibrarySurface LibrarySurface::of(const ProgramDocument& lib) {
  LibrarySurface s;
  for (const auto& cls : lib.classes) {
    for (const auto& m : cls.methods) {
      if (m.visibility == Visibility::kPublic) s.entry_points.insert(m.ref);
    }
  }
  return s;
}

CallGraph library_graph(const ProgramDocument& lib, const OriginMap& map) {
  if (lib.is_application()) {
    throw AnalysisError("library_graph requires a library document");
  }
  const auto hierarchy = static_cg::HierarchyIndex::build(lib);
  CallGraph init = static_cg::init_edges(lib, hierarchy, map);
  return static_cg::apply_cha(init, lib, hierarchy, map);
}

namespace {

/// Depth-first enumeration of simple paths to one sink.
class PathSearch {
 public:
  PathSearch(const CallGraph& g, const MethodRef& sink, const ChainLimits& limits)
      : g_(g), sink_(sink), limits_(limits) {
    // Vertices that can reach the sink at all; everything else is a dead end.
    std::vector<MethodRef> stack{sink};
    live_.insert(sink);
    while (!stack.empty()) {
      MethodRef cur = std::move(stack.back());
      stack.pop_back();
      for (const auto& p : g_.predecessors(cur)) {
        if (live_.insert(p).second) stack.push_back(p);
      }
    }
  }

  /// Appends paths from `entry`; returns false once the per-sink cap binds.
  bool run(const MethodRef& entry, std::vector<std::vector<MethodRef>>& out) {
    if (entry == sink_ || !live_.contains(entry)) return true;
    path_ = {entry};
    on_path_ = {entry};
    return extend(out);
  }

  bool truncated() const { return truncated_; }

 private:
  bool extend(std::vector<std::vector<MethodRef>>& out) {
    const MethodRef& cur = path_.back();
    const std::size_t edges = path_.size() - 1;
    for (const auto& [next, _] : g_.successors(cur)) {
      if (on_path_.contains(next) || !live_.contains(next)) continue;
      if (edges == limits_.max_length) {
        if (!truncated_ && longer_path_exists(next)) truncated_ = true;
        continue;
      }
      if (next == sink_) {
        if (out.size() == limits_.max_chains_per_sink) {
          truncated_ = true;
          return false;
        }
        out.push_back(path_);
        out.back().push_back(next);
        continue;
      }
      path_.push_back(next);
      on_path_.insert(next);
      const bool keep_going = extend(out);
      on_path_.erase(next);
      path_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  /// Whether a simple continuation from `from` to the sink exists that
  /// avoids the current path: plain reachability in the graph minus the
  /// path.
  bool longer_path_exists(const MethodRef& from) const {
    std::set<MethodRef> seen{from};
    std::vector<MethodRef> stack{from};
    while (!stack.empty()) {
      MethodRef cur = std::move(stack.back());
      stack.pop_back();
      if (cur == sink_) return true;
      for (const auto& [next, _] : g_.successors(cur)) {
        if (!on_path_.contains(next) && seen.insert(next).second) {
          stack.push_back(next);
        }
      }
    }
    return false;
  }

  const CallGraph& g_;
  const MethodRef& sink_;
  const ChainLimits& limits_;
  std::set<MethodRef> live_;
  std::vector<MethodRef> path_;
  std::set<MethodRef> on_path_;
  bool truncated_ = false;
};

}  // namespace

ChainFile enumerate_chains(const CallGraph& graph, const LibrarySurface& surface,
                           const std::vector<MethodRef>& sinks,
                           const ChainLimits& limits, const Coordinate& library) {
  limits.validate();
  ChainFile file{library, {}, {}, {}, {}};
  const Origin own = Origin::third_party(library);
  const std::set<MethodRef> ordered_sinks(sinks.begin(), sinks.end());

  for (const auto& sink : ordered_sinks) {
    const Origin* origin = graph.origin(sink);
    if (origin == nullptr || *origin != own) {
      file.missing_sinks.push_back(sink);
      continue;
    }
    PathSearch search(graph, sink, limits);
    std::vector<std::vector<MethodRef>> paths;
    for (const auto& entry : surface.entry_points) {
      if (!graph.has_vertex(entry)) continue;
      if (!search.run(entry, paths)) break;
    }
    for (const auto& p : paths) file.chains.push_back(CallChain::from_path(p, library));
    if (search.truncated()) {
      file.truncated_sinks.push_back(sink);
    } else if (paths.empty()) {
      file.unreachable_sinks.push_back(sink);
    }
  }
  return file;
}

std::vector<MethodRef> sinks_for(const VulnDbDocument& vulndb,
                                 const Coordinate& library) {
  std::set<MethodRef> out;
  for (const auto& rec : vulndb.records) {
    if (rec.package == library.package() &&
        rec.affected.satisfied_by(library.version)) {
      out.insert(rec.sinks.begin(), rec.sinks.end());
    }
  }
  return {out.begin(), out.end()};
}

ChainFile precompute(const ProgramDocument& lib, const VulnDbDocument& vulndb,
                     const ChainLimits& limits, const OriginMap& map) {
  const CallGraph graph = library_graph(lib, map);
  return enumerate_chains(graph, LibrarySurface::of(lib),
                          sinks_for(vulndb, *lib.library), limits, *lib.library);
}

std::vector<ChainFile> precompute_all(const std::vector<ProgramDocument>& libs,
                                      const VulnDbDocument& vulndb,
                                      const ChainLimits& limits,
                                      const OriginMap& map) {
  std::vector<std::future<ChainFile>> jobs;
  jobs.reserve(libs.size());
  for (const auto& lib : libs) {
    jobs.push_back(std::async(std::launch::async, [&lib, &vulndb, &limits, &map] {
      return precompute(lib, vulndb, limits, map);
    }));
  }
  std::vector<ChainFile> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace sca::chains
