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

#include <vector>

#include "sca/call_graph.hpp"
#include "sca/documents.hpp"
#include "sca/origin.hpp"

namespace sca::dynamic_cg {

/// A dynamic edge from framework code into application code, e.g. a test
/// runner invoking a test method reflectively.
struct FrameworkEntry {
  MethodRef caller;
  MethodRef callee;
  friend bool operator==(const FrameworkEntry&, const FrameworkEntry&) = default;
};

/// Deduplicated dynamic-provenance graph of every event in the trace.
CallGraph ingest_trace(const TraceDocument& trace, const OriginMap& map);

/// Ingests several traces and unions them.
CallGraph ingest_traces(const std::vector<TraceDocument>& traces,
                        const OriginMap& map);

/// Framework -> first-party edges, ordered by (caller, callee).
std::vector<FrameworkEntry> framework_entries(const CallGraph& g);

/// Everything reachable from the entry callees along dynamic edges. The
/// callees are included, their framework callers are not, and every edge
/// kept was traversed, so the result is rooted only at first-party methods.
CallGraph project(const CallGraph& g, const std::vector<FrameworkEntry>& entries);

/// The callees of `entries`: the first-party roots of the projection.
EntryPointSet entry_callees(const std::vector<FrameworkEntry>& entries);

}  // namespace sca::dynamic_cg
