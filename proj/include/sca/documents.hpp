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
#include <optional>
#include <string>
#include <vector>

#include "sca/call_chain.hpp"
#include "sca/method_ref.hpp"
#include "sca/version.hpp"

namespace sca {

struct TraceEvent {
  MethodRef caller;
  MethodRef callee;
  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Call events in file order. Duplicates are kept here and collapse when
/// the trace becomes a graph.
struct TraceDocument {
  std::vector<TraceEvent> events;
  friend bool operator==(const TraceDocument&, const TraceDocument&) = default;
};

struct Dependency {
  PackageKey package;
  Constraint constraint;
  friend bool operator==(const Dependency&, const Dependency&) = default;
};

/// Snapshot of a package repository: package -> version -> dependencies in
/// declaration order.
struct RegistryDocument {
  std::map<PackageKey, std::map<Version, std::vector<Dependency>>> packages;

  bool contains(const Coordinate& c) const;
  /// Dependencies of an exact coordinate; nullptr when absent.
  const std::vector<Dependency>* dependencies(const Coordinate& c) const;

  friend bool operator==(const RegistryDocument&, const RegistryDocument&) = default;
};

/// Direct dependencies of a project, in declaration order.
struct ManifestDocument {
  std::vector<Dependency> dependencies;
  friend bool operator==(const ManifestDocument&, const ManifestDocument&) = default;
};

/// Exact resolved coordinates with parent links, as recorded by a package
/// manager at one point in time. A missing parent means a direct dependency.
struct Lockfile {
  struct Entry {
    Coordinate coordinate;
    std::optional<Coordinate> parent;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;
  friend bool operator==(const Lockfile&, const Lockfile&) = default;
};

struct VulnRecord {
  std::string id;
  PackageKey package;
  Constraint affected;
  std::vector<MethodRef> sinks;
  friend bool operator==(const VulnRecord&, const VulnRecord&) = default;
};

struct VulnDbDocument {
  std::vector<VulnRecord> records;
  friend bool operator==(const VulnDbDocument&, const VulnDbDocument&) = default;
};

/// Precomputed vulnerable-method call chains for one library version.
struct ChainFile {
  Coordinate library;
  std::vector<CallChain> chains;
  /// Sinks whose enumeration hit max_chains_per_sink.
  std::vector<MethodRef> truncated_sinks;
  /// Sinks not declared in this library version.
  std::vector<MethodRef> missing_sinks;
  /// Sinks declared but not reachable from any public method within limits.
  std::vector<MethodRef> unreachable_sinks;

  friend bool operator==(const ChainFile&, const ChainFile&) = default;
};

}  // namespace sca
