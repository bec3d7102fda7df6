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

#include "sca/call_graph.hpp"

#include <deque>

#include "sca/error.hpp"

namespace sca {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kStatic:
      return "static";
    case Provenance::kDynamic:
      return "dynamic";
    case Provenance::kChain:
      return "chain";
  }
  return "";
}

Provenance provenance_from_string(std::string_view text) {
  if (text == "static") return Provenance::kStatic;
  if (text == "dynamic") return Provenance::kDynamic;
  if (text == "chain") return Provenance::kChain;
  throw ParseError("unknown provenance '" + std::string(text) + "'");
}

std::vector<Provenance> ProvenanceSet::members() const {
  std::vector<Provenance> out;
  for (Provenance p :
       {Provenance::kStatic, Provenance::kDynamic, Provenance::kChain}) {
    if (contains(p)) out.push_back(p);
  }
  return out;
}

const Origin* CallGraph::origin(const MethodRef& ref) const {
  auto it = vertices_.find(ref);
  return it == vertices_.end() ? nullptr : &it->second;
}

const CallGraph::Successors& CallGraph::successors(const MethodRef& ref) const {
  static const Successors kNone;
  auto it = out_.find(ref);
  return it == out_.end() ? kNone : it->second;
}

const std::set<MethodRef>& CallGraph::predecessors(const MethodRef& ref) const {
  static const std::set<MethodRef> kNone;
  auto it = in_.find(ref);
  return it == in_.end() ? kNone : it->second;
}

bool CallGraph::has_edge(const MethodRef& caller,
                         const MethodRef& callee) const {
  return successors(caller).contains(callee);
}

std::optional<ProvenanceSet> CallGraph::edge_provenance(
    const MethodRef& caller, const MethodRef& callee) const {
  const Successors& succ = successors(caller);
  auto it = succ.find(callee);
  if (it == succ.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> CallGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [caller, succ] : out_) {
    for (const auto& [callee, prov] : succ) out.push_back({caller, callee, prov});
  }
  return out;
}

bool GraphBuilder::add_vertex(const MethodRef& ref, const Origin& origin) {
  return graph_.vertices_.try_emplace(ref, origin).second;
}

void GraphBuilder::set_origin(const MethodRef& ref, const Origin& origin) {
  auto it = graph_.vertices_.find(ref);
  if (it == graph_.vertices_.end()) {
    throw Error("set_origin on missing vertex " + ref.str());
  }
  it->second = origin;
}

bool GraphBuilder::add_edge(const MethodRef& caller, const MethodRef& callee,
                            ProvenanceSet provenance) {
  if (!graph_.has_vertex(caller) || !graph_.has_vertex(callee)) {
    throw Error("edge endpoint is not a vertex: " + caller.str() + " -> " +
                callee.str());
  }
  auto [it, inserted] = graph_.out_[caller].try_emplace(callee, provenance);
  if (!inserted) {
    it->second |= provenance;
    return false;
  }
  graph_.in_[callee].insert(caller);
  ++graph_.edge_count_;
  return true;
}

bool GraphBuilder::remove_edge(const MethodRef& caller,
                               const MethodRef& callee) {
  auto out = graph_.out_.find(caller);
  if (out == graph_.out_.end() || out->second.erase(callee) == 0) return false;
  if (out->second.empty()) graph_.out_.erase(out);
  auto in = graph_.in_.find(callee);
  in->second.erase(caller);
  if (in->second.empty()) graph_.in_.erase(in);
  --graph_.edge_count_;
  return true;
}

bool GraphBuilder::remove_vertex(const MethodRef& ref) {
  if (!graph_.has_vertex(ref)) return false;
  std::vector<MethodRef> callees;
  for (const auto& [callee, _] : graph_.successors(ref)) callees.push_back(callee);
  for (const auto& callee : callees) remove_edge(ref, callee);
  const std::vector<MethodRef> callers(graph_.predecessors(ref).begin(),
                                       graph_.predecessors(ref).end());
  for (const auto& caller : callers) remove_edge(caller, ref);
  graph_.vertices_.erase(ref);
  return true;
}

EntryPointSet first_party_roots(const CallGraph& g) {
  EntryPointSet roots;
  for (const auto& [ref, origin] : g.vertices()) {
    if (origin.is_first_party() && g.in_degree(ref) == 0) {
      roots.methods.insert(ref);
    }
  }
  return roots;
}

std::set<MethodRef> reachable_from(const CallGraph& g,
                                   const std::set<MethodRef>& roots) {
  std::set<MethodRef> seen;
  std::vector<MethodRef> stack;
  for (const auto& r : roots) {
    if (g.has_vertex(r) && seen.insert(r).second) stack.push_back(r);
  }
  while (!stack.empty()) {
    MethodRef cur = std::move(stack.back());
    stack.pop_back();
    for (const auto& [next, _] : g.successors(cur)) {
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return seen;
}

std::optional<std::vector<MethodRef>> shortest_path(
    const CallGraph& g, const std::set<MethodRef>& sources,
    const MethodRef& target) {
  // parent[v] == v marks a source. Sources and successors are visited in
  // canonical order, so the first discovery of each vertex lies on its
  // lexicographically smallest shortest path.
  std::map<MethodRef, MethodRef> parent;
  std::deque<MethodRef> queue;
  for (const auto& s : sources) {
    if (!g.has_vertex(s)) continue;
    parent.emplace(s, s);
    queue.push_back(s);
  }
  bool found = parent.contains(target);
  while (!found && !queue.empty()) {
    MethodRef cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& [next, _] : g.successors(cur)) {
      if (parent.try_emplace(next, cur).second) {
        if (next == target) {
          found = true;
          break;
        }
        queue.push_back(next);
      }
    }
  }
  if (!found) return std::nullopt;

  std::vector<MethodRef> path{target};
  while (true) {
    const MethodRef& p = parent.at(path.back());
    if (p == path.back()) break;
    path.push_back(p);
  }
  return std::vector<MethodRef>(path.rbegin(), path.rend());
}

CallGraph induced_subgraph(const CallGraph& g,
                           const std::set<MethodRef>& keep) {
  GraphBuilder b;
  for (const auto& ref : keep) {
    if (const Origin* o = g.origin(ref)) b.add_vertex(ref, *o);
  }
  for (const auto& ref : keep) {
    if (!g.has_vertex(ref)) continue;
    for (const auto& [callee, prov] : g.successors(ref)) {
      if (keep.contains(callee)) b.add_edge(ref, callee, prov);
    }
  }
  return std::move(b).build();
}

}  // namespace sca
