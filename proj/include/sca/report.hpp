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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sca/compose.hpp"
#include "sca/depres.hpp"
#include "sca/remediate.hpp"

namespace sca {

/// Vertex, edge and reachable-sink counts of one graph.
struct GraphStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t sinks = 0;
  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

struct BaselineComparison {
  depres::Mode baseline = depres::Mode::kDeclared;
  depres::Comparison metrics;
};

/// Everything one CLI invocation reports. Sections that do not apply to
/// the command stay empty.
struct FindingsReport {
  std::string command;
  std::vector<compose::Finding> findings;
  std::optional<depres::ResolutionResult> resolution;
  std::optional<BaselineComparison> comparison;
  std::optional<remediate::SemanticDiff> semantic_diff;
  std::optional<remediate::BreakingReport> breaking;
  /// Keyed by graph name: static, dynamic, combined.
  std::map<std::string, GraphStats> stats;
  std::map<std::string, std::int64_t> diagnostics;
  std::vector<std::string> notes;

  std::size_t reachable_count() const;
};

}  // namespace sca

namespace sca::formats {

enum class ReportFormat {
  /// JSON with sorted keys and stable list order.
  kMachine,
  /// Markdown, findings grouped by vulnerability.
  kHuman,
};

/// Accepts `json` and `markdown`.
ReportFormat report_format_from_string(std::string_view text);

std::string emit_report(const FindingsReport& report, ReportFormat format);

}  // namespace sca::formats
