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

#include "sca/dynamic_cg.hpp"

namespace sca::dynamic_cg {

CallGraph ingest_trace(const TraceDocument& trace, const OriginMap& map) {
  return ingest_traces({trace}, map);
}

CallGraph ingest_traces(const std::vector<TraceDocument>& traces,
                        const OriginMap& map) {
  GraphBuilder b;
  for (const auto& trace : traces) {
    for (const auto& e : trace.events) {
      b.add_vertex(e.caller, map.classify(e.caller));
      b.add_vertex(e.callee, map.classify(e.callee));
      b.add_edge(e.caller, e.callee, Provenance::kDynamic);
    }
  }
  return std::move(b).build();
}

std::vector<FrameworkEntry> framework_entries(const CallGraph& g) {
  std::vector<FrameworkEntry> out;
  for (const auto& [caller, origin] : g.vertices()) {
    if (!origin.is_framework()) continue;
    for (const auto& [callee, _] : g.successors(caller)) {
      if (g.origin(callee)->is_first_party()) out.push_back({caller, callee});
    }
  }
  return out;
}

EntryPointSet entry_callees(const std::vector<FrameworkEntry>& entries) {
  EntryPointSet out;
  for (const auto& e : entries) out.methods.insert(e.callee);
  return out;
}

CallGraph project(const CallGraph& g, const std::vector<FrameworkEntry>& entries) {
  GraphBuilder b;
  std::vector<MethodRef> stack;
  for (const auto& e : entries) {
    const Origin* o = g.origin(e.callee);
    if (o == nullptr || o->is_framework()) continue;
    if (b.add_vertex(e.callee, *o)) stack.push_back(e.callee);
  }
  // Framework vertices are never entered: re-entry into application code
  // from a framework is its own framework entry.
  while (!stack.empty()) {
    MethodRef cur = std::move(stack.back());
    stack.pop_back();
    for (const auto& [next, prov] : g.successors(cur)) {
      const Origin& o = *g.origin(next);
      if (o.is_framework()) continue;
      if (b.add_vertex(next, o)) stack.push_back(next);
      b.add_edge(cur, next, prov);
    }
  }
  return std::move(b).build();
}

}  // namespace sca::dynamic_cg
