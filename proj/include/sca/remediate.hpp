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

#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "sca/call_graph.hpp"
#include "sca/program.hpp"
#include "sca/version.hpp"

namespace sca::remediate {

struct VersionDiff {
  Coordinate from;
  Coordinate to;
  std::set<MethodRef> added;
  std::set<MethodRef> removed;
  /// Present in both versions with a different body digest or call-site
  /// list.
  std::set<MethodRef> body_changed;

  /// removed and body_changed: the seeds of the semantic closure.
  std::set<MethodRef> seeds() const;
};

/// Throws AnalysisError unless both documents are libraries with the same
/// group and artifact.
VersionDiff diff_versions(const ProgramDocument& v1, const ProgramDocument& v2);

struct ChangeReason {
  enum class Kind { kDirect, kViaCallee };
  Kind kind = Kind::kDirect;
  /// For kViaCallee, a shortest call path from the method to a directly
  /// changed one, both ends included.
  std::vector<MethodRef> path;
};

struct SemanticDiff {
  VersionDiff base;
  std::set<MethodRef> changed_closure;
  std::map<MethodRef, ChangeReason> reasons;
};

/// Every method that can reach a seed in `graph`, seeds included.
std::set<MethodRef> changed_callers(const std::set<MethodRef>& seeds,
                                    const CallGraph& graph);

/// Closes the diff over `v1graph`: a method is changed if it was removed or
/// its body changed, or if it calls a changed method.
SemanticDiff semantic_closure(const VersionDiff& diff, const CallGraph& v1graph);

enum class GraphMode { kStaticOnly, kDynamicOnly, kCombined };

std::string_view to_string(GraphMode mode);
GraphMode graph_mode_from_string(std::string_view text);

struct RiskyMethod {
  MethodRef method;
  /// Entry point to `method` in the application graph; just the method
  /// when no entry point reaches it.
  std::vector<MethodRef> witness;
};

enum class Verdict { kPotentiallyBreaking, kNoObservedImpact };

std::string_view to_string(Verdict v);

struct BreakingReport {
  Coordinate from;
  Coordinate to;
  GraphMode mode = GraphMode::kCombined;
  std::vector<RiskyMethod> risky;
  Verdict verdict = Verdict::kNoObservedImpact;
};

/// Changed methods that are vertices of `app`, in ref order.
BreakingReport check_breaking(const CallGraph& app, const EntryPointSet& entry_points,
                              const SemanticDiff& sem, GraphMode mode);

}  // namespace sca::remediate
