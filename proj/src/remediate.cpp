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

#include "sca/remediate.hpp"

#include <deque>
#include <string>

#include "sca/error.hpp"

namespace sca::remediate {

std::set<MethodRef> VersionDiff::seeds() const {
  std::set<MethodRef> out = removed;
  out.insert(body_changed.begin(), body_changed.end());
  return out;
}

namespace {

std::map<MethodRef, const MethodModel*> methods_of(const ProgramDocument& doc) {
  std::map<MethodRef, const MethodModel*> out;
  for (const auto& cls : doc.classes) {
    for (const auto& m : cls.methods) out.emplace(m.ref, &m);
  }
  return out;
}

}  // namespace

VersionDiff diff_versions(const ProgramDocument& v1, const ProgramDocument& v2) {
  if (!v1.library || !v2.library) {
    throw AnalysisError("version diff requires two library documents");
  }
  if (v1.library->package() != v2.library->package()) {
    throw AnalysisError("version diff across different packages: " +
                        v1.library->str() + " vs " + v2.library->str());
  }
  VersionDiff d;
  d.from = *v1.library;
  d.to = *v2.library;
  const auto old_methods = methods_of(v1);
  const auto new_methods = methods_of(v2);
  for (const auto& [ref, m] : old_methods) {
    auto it = new_methods.find(ref);
    if (it == new_methods.end()) {
      d.removed.insert(ref);
    } else if (m->body_digest != it->second->body_digest ||
               m->call_sites != it->second->call_sites) {
      d.body_changed.insert(ref);
    }
  }
  for (const auto& [ref, _] : new_methods) {
    if (!old_methods.contains(ref)) d.added.insert(ref);
  }
  return d;
}

std::set<MethodRef> changed_callers(const std::set<MethodRef>& seeds,
                                    const CallGraph& graph) {
  std::set<MethodRef> out = seeds;
  std::vector<MethodRef> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    MethodRef cur = std::move(stack.back());
    stack.pop_back();
    if (!graph.has_vertex(cur)) continue;
    for (const auto& p : graph.predecessors(cur)) {
      if (out.insert(p).second) stack.push_back(p);
    }
  }
  return out;
}

SemanticDiff semantic_closure(const VersionDiff& diff, const CallGraph& v1graph) {
  SemanticDiff sem;
  sem.base = diff;
  // Reverse breadth-first search from all seeds at once; `next` records the
  // callee through which each method was first reached.
  std::map<MethodRef, MethodRef> next;
  std::deque<MethodRef> queue;
  for (const auto& s : diff.seeds()) {
    sem.changed_closure.insert(s);
    sem.reasons[s] = ChangeReason{ChangeReason::Kind::kDirect, {}};
    queue.push_back(s);
  }
  while (!queue.empty()) {
    MethodRef cur = std::move(queue.front());
    queue.pop_front();
    if (!v1graph.has_vertex(cur)) continue;
    for (const auto& p : v1graph.predecessors(cur)) {
      if (!sem.changed_closure.insert(p).second) continue;
      next.emplace(p, cur);
      queue.push_back(p);
    }
  }
  for (const auto& [m, _] : next) {
    ChangeReason r{ChangeReason::Kind::kViaCallee, {m}};
    for (auto it = next.find(m); it != next.end(); it = next.find(it->second)) {
      r.path.push_back(it->second);
    }
    sem.reasons[m] = std::move(r);
  }
  return sem;
}

std::string_view to_string(GraphMode mode) {
  switch (mode) {
    case GraphMode::kStaticOnly:
      return "static-only";
    case GraphMode::kDynamicOnly:
      return "dynamic-only";
    case GraphMode::kCombined:
      return "combined";
  }
  return "";
}

GraphMode graph_mode_from_string(std::string_view text) {
  if (text == "static-only") return GraphMode::kStaticOnly;
  if (text == "dynamic-only") return GraphMode::kDynamicOnly;
  if (text == "combined") return GraphMode::kCombined;
  throw ParseError("unknown graph mode '" + std::string(text) + "'");
}

std::string_view to_string(Verdict v) {
  return v == Verdict::kPotentiallyBreaking ? "potentially-breaking"
                                            : "no-observed-impact";
}

BreakingReport check_breaking(const CallGraph& app, const EntryPointSet& entry_points,
                              const SemanticDiff& sem, GraphMode mode) {
  BreakingReport r;
  r.from = sem.base.from;
  r.to = sem.base.to;
  r.mode = mode;
  for (const auto& m : sem.changed_closure) {
    if (!app.has_vertex(m)) continue;
    auto path = shortest_path(app, entry_points.methods, m);
    r.risky.push_back({m, path ? std::move(*path) : std::vector<MethodRef>{m}});
  }
  r.verdict = r.risky.empty() ? Verdict::kNoObservedImpact
                              : Verdict::kPotentiallyBreaking;
  return r;
}

}  // namespace sca::remediate
