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

#include "sca/depres.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "sca/error.hpp"

namespace sca::depres {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kDeclared:
      return "declared";
    case Mode::kMaven:
      return "maven";
    case Mode::kNpm:
      return "npm";
    case Mode::kLockfile:
      return "lockfile";
  }
  return "";
}

Mode mode_from_string(std::string_view text) {
  if (text == "declared") return Mode::kDeclared;
  if (text == "maven") return Mode::kMaven;
  if (text == "npm") return Mode::kNpm;
  if (text == "lockfile") return Mode::kLockfile;
  throw ParseError("unknown resolution mode '" + std::string(text) + "'");
}

std::vector<Coordinate> ResolutionResult::versions_of(const PackageKey& pkg) const {
  std::vector<Coordinate> out;
  for (const auto& c : coordinates) {
    if (c.group == pkg.group && c.artifact == pkg.artifact) out.push_back(c);
  }
  return out;
}

std::optional<Version> max_satisfying(const RegistryDocument& registry,
                                      const PackageKey& pkg,
                                      const Constraint& constraint) {
  auto it = registry.packages.find(pkg);
  if (it == registry.packages.end()) return std::nullopt;
  for (auto v = it->second.rbegin(); v != it->second.rend(); ++v) {
    if (constraint.satisfied_by(v->first)) return v->first;
  }
  return std::nullopt;
}

namespace {

Coordinate at_version(const PackageKey& pkg, Version v) {
  return Coordinate{pkg.group, pkg.artifact, std::move(v)};
}

std::string describe(const Dependency& d) {
  return d.package.str() + "@" + d.constraint.str();
}

}  // namespace

ResolutionResult resolve_declared(const ManifestDocument& manifest,
                                  const RegistryDocument& registry) {
  ResolutionResult r;
  r.mode = Mode::kDeclared;
  for (const auto& dep : manifest.dependencies) {
    if (!registry.packages.contains(dep.package)) {
      r.diagnostics.push_back("unknown package " + dep.package.str());
      ++r.unsatisfied;
      continue;
    }
    auto v = max_satisfying(registry, dep.package, dep.constraint);
    if (!v) {
      r.diagnostics.push_back("no version satisfies " + describe(dep));
      ++r.unsatisfied;
      continue;
    }
    Coordinate c = at_version(dep.package, *v);
    r.tree.push_back({c, std::nullopt, 1, TreeNode::Note::kNone});
    r.coordinates.insert(std::move(c));
  }
  return r;
}

ResolutionResult resolve_maven(const ManifestDocument& manifest,
                               const RegistryDocument& registry) {
  struct Pending {
    Dependency dep;
    std::optional<std::size_t> parent;
    std::size_t depth;
    std::string path;
  };

  ResolutionResult r;
  r.mode = Mode::kMaven;
  std::map<PackageKey, Version> winners;
  std::deque<Pending> queue;
  for (const auto& dep : manifest.dependencies) {
    queue.push_back({dep, std::nullopt, 1, "<root> > " + describe(dep)});
  }

  while (!queue.empty()) {
    Pending item = std::move(queue.front());
    queue.pop_front();
    const PackageKey& pkg = item.dep.package;
    if (!registry.packages.contains(pkg)) {
      throw ResolutionError("unknown package " + pkg.str() + " via " + item.path);
    }
    const auto requested = max_satisfying(registry, pkg, item.dep.constraint);

    if (auto w = winners.find(pkg); w != winners.end()) {
      if (!requested || *requested != w->second) {
        ++r.conflicts_mediated;
        r.diagnostics.push_back(
            "conflict: " + item.path + " mediated to " + pkg.str() + ":" +
            w->second.str() + " (nearest definition)");
      }
      r.tree.push_back({at_version(pkg, w->second), item.parent, item.depth,
                        !requested || *requested != w->second
                            ? TreeNode::Note::kOmittedForConflict
                            : TreeNode::Note::kDuplicate});
      continue;
    }
    if (!requested) {
      ++r.unsatisfied;
      r.diagnostics.push_back("unsatisfied: no version satisfies " + item.path);
      continue;
    }

    winners.emplace(pkg, *requested);
    Coordinate c = at_version(pkg, *requested);
    const std::size_t node = r.tree.size();
    r.tree.push_back({c, item.parent, item.depth, TreeNode::Note::kNone});
    for (const auto& child : *registry.dependencies(c)) {
      queue.push_back({child, node, item.depth + 1,
                       item.path + " > " + describe(child)});
    }
    r.coordinates.insert(std::move(c));
  }
  return r;
}

ResolutionResult resolve_npm(const ManifestDocument& manifest,
                             const RegistryDocument& registry) {
  ResolutionResult r;
  r.mode = Mode::kNpm;
  std::set<Coordinate> expanded;
  std::vector<Coordinate> path;

  auto visit = [&](auto&& self, const Dependency& dep,
                   std::optional<std::size_t> parent, std::size_t depth,
                   const std::string& trail) -> void {
    const std::string where = trail + describe(dep);
    if (!registry.packages.contains(dep.package)) {
      throw ResolutionError("unknown package " + dep.package.str() + " via " + where);
    }
    auto v = max_satisfying(registry, dep.package, dep.constraint);
    if (!v) throw ResolutionError("no version satisfies " + where);

    Coordinate c = at_version(dep.package, *v);
    const std::size_t node = r.tree.size();
    r.coordinates.insert(c);
    if (std::find(path.begin(), path.end(), c) != path.end()) {
      r.tree.push_back({c, parent, depth, TreeNode::Note::kCycle});
      return;
    }
    // Resolution is context-free, so a coordinate's subtree is the same
    // wherever it appears; expand it once.
    if (!expanded.insert(c).second) {
      r.tree.push_back({c, parent, depth, TreeNode::Note::kDuplicate});
      return;
    }
    r.tree.push_back({c, parent, depth, TreeNode::Note::kNone});
    path.push_back(c);
    for (const auto& child : *registry.dependencies(c)) {
      self(self, child, node, depth + 1, where + " > ");
    }
    path.pop_back();
  };

  for (const auto& dep : manifest.dependencies) {
    visit(visit, dep, std::nullopt, 1, "<root> > ");
  }
  return r;
}

ResolutionResult replay_lockfile(const Lockfile& lock,
                                 const RegistryDocument& registry) {
  ResolutionResult r;
  r.mode = Mode::kLockfile;
  std::map<Coordinate, std::size_t> index;
  for (const auto& e : lock.entries) {
    if (!registry.contains(e.coordinate)) {
      throw ResolutionError("stale lockfile: " + e.coordinate.str() +
                            " is not in the registry snapshot");
    }
    index.try_emplace(e.coordinate, index.size());
  }
  // Depths follow parent links; parents may be listed after children.
  std::map<Coordinate, std::size_t> depth;
  auto depth_of = [&](auto&& self, const Coordinate& c, std::size_t guard) -> std::size_t {
    if (auto it = depth.find(c); it != depth.end()) return it->second;
    if (guard > lock.entries.size()) {
      throw ResolutionError("lockfile parent links form a cycle at " + c.str());
    }
    const Lockfile::Entry* entry = nullptr;
    for (const auto& e : lock.entries) {
      if (e.coordinate == c) {
        entry = &e;
        break;
      }
    }
    std::size_t d = 1;
    if (entry->parent) {
      if (!index.contains(*entry->parent)) {
        throw ResolutionError("lockfile entry " + c.str() + " names parent " +
                              entry->parent->str() + " which is not an entry");
      }
      d = self(self, *entry->parent, guard + 1) + 1;
    }
    depth.emplace(c, d);
    return d;
  };

  std::map<Coordinate, std::size_t> node_of;
  for (const auto& e : lock.entries) {
    std::optional<std::size_t> parent;
    if (e.parent) {
      if (!index.contains(*e.parent)) {
        throw ResolutionError("lockfile entry " + e.coordinate.str() +
                              " names parent " + e.parent->str() +
                              " which is not an entry");
      }
      if (auto it = node_of.find(*e.parent); it != node_of.end()) parent = it->second;
    }
    const bool dup = r.coordinates.contains(e.coordinate);
    node_of.try_emplace(e.coordinate, r.tree.size());
    r.tree.push_back({e.coordinate, parent, depth_of(depth_of, e.coordinate, 0),
                      dup ? TreeNode::Note::kDuplicate : TreeNode::Note::kNone});
    r.coordinates.insert(e.coordinate);
  }
  return r;
}

Lockfile to_lockfile(const ResolutionResult& result) {
  Lockfile lock;
  std::set<Coordinate> seen;
  for (const auto& node : result.tree) {
    if (node.note == TreeNode::Note::kOmittedForConflict) continue;
    if (!seen.insert(node.coordinate).second) continue;
    std::optional<Coordinate> parent;
    if (node.parent) parent = result.tree[*node.parent].coordinate;
    lock.entries.push_back({node.coordinate, std::move(parent)});
  }
  return lock;
}

Comparison compare(const ResolutionResult& baseline,
                   const ResolutionResult& candidate) {
  Comparison c;
  c.baseline_count = baseline.coordinates.size();
  c.candidate_count = candidate.coordinates.size();
  std::set_difference(baseline.coordinates.begin(), baseline.coordinates.end(),
                      candidate.coordinates.begin(), candidate.coordinates.end(),
                      std::back_inserter(c.only_in_baseline));
  std::set_difference(candidate.coordinates.begin(), candidate.coordinates.end(),
                      baseline.coordinates.begin(), baseline.coordinates.end(),
                      std::back_inserter(c.only_in_candidate));
  if (c.baseline_count > 0) {
    c.percent_change = 100.0 *
                       (static_cast<double>(c.candidate_count) -
                        static_cast<double>(c.baseline_count)) /
                       static_cast<double>(c.baseline_count);
  }
  return c;
}

}  // namespace sca::depres
