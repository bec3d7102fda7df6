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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sca/documents.hpp"
#include "sca/version.hpp"

/// Dependency discovery. Four modes over the same manifest and registry
/// snapshot:
///
///   declared  direct dependencies only, each pinned to its best version;
///             the manifest-reading baseline
///   maven     full resolution, one version per package, nearest
///             definition wins
///   npm       full resolution, every constraint resolved independently,
///             so one package may appear at several versions
///   lockfile  exact coordinates recorded by a package manager, replayed
///             and validated against the snapshot
namespace sca::depres {

enum class Mode { kDeclared, kMaven, kNpm, kLockfile };

std::string_view to_string(Mode mode);
Mode mode_from_string(std::string_view text);

struct TreeNode {
  enum class Note {
    kNone,
    /// Lost conflict mediation; shows the winning coordinate and is not
    /// expanded again.
    kOmittedForConflict,
    /// Already expanded elsewhere in the tree.
    kDuplicate,
    /// Already on the path from the root.
    kCycle,
  };

  Coordinate coordinate;
  std::optional<std::size_t> parent;
  std::size_t depth = 1;
  Note note = Note::kNone;
};

struct ResolutionResult {
  Mode mode = Mode::kDeclared;
  std::set<Coordinate> coordinates;
  /// Nodes in discovery order; parents precede children.
  std::vector<TreeNode> tree;
  std::vector<std::string> diagnostics;
  std::size_t conflicts_mediated = 0;
  std::size_t unsatisfied = 0;

  std::vector<Coordinate> versions_of(const PackageKey& pkg) const;
};

/// Highest registry version of `pkg` satisfying `constraint`.
std::optional<Version> max_satisfying(const RegistryDocument& registry,
                                      const PackageKey& pkg,
                                      const Constraint& constraint);

/// Unknown packages and unsatisfiable constraints are reported as
/// diagnostics and the entry is left out.
ResolutionResult resolve_declared(const ManifestDocument& manifest,
                                  const RegistryDocument& registry);

/// Breadth-first; the first occurrence of a package (shallowest, then
/// declaration order) fixes its version. Throws ResolutionError for a
/// package missing from the registry, naming the path from the root.
ResolutionResult resolve_maven(const ManifestDocument& manifest,
                               const RegistryDocument& registry);

/// Throws ResolutionError naming the path for unknown packages and
/// unsatisfiable constraints.
ResolutionResult resolve_npm(const ManifestDocument& manifest,
                             const RegistryDocument& registry);

/// Throws ResolutionError for coordinates missing from the registry (stale
/// lockfile) and for parents that are not themselves entries.
ResolutionResult replay_lockfile(const Lockfile& lock,
                                 const RegistryDocument& registry);

/// Records a resolution as a lockfile: one entry per coordinate, first
/// occurrence in tree order.
Lockfile to_lockfile(const ResolutionResult& result);

struct Comparison {
  std::size_t baseline_count = 0;
  std::size_t candidate_count = 0;
  std::vector<Coordinate> only_in_baseline;
  std::vector<Coordinate> only_in_candidate;
  /// 100 * (candidate - baseline) / baseline; nullopt when the baseline is
  /// empty.
  std::optional<double> percent_change;
};

Comparison compare(const ResolutionResult& baseline,
                   const ResolutionResult& candidate);

}  // namespace sca::depres
