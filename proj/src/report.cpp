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

#include "sca/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "sca/error.hpp"

namespace sca {

std::size_t FindingsReport::reachable_count() const {
  std::size_t n = 0;
  for (const auto& f : findings) n += f.reachable ? 1 : 0;
  return n;
}

}  // namespace sca

namespace sca::formats {

namespace {

using json = nlohmann::json;

json refs(const std::vector<MethodRef>& path) {
  json out = json::array();
  for (const auto& r : path) out.push_back(r.str());
  return out;
}

json refs(const std::set<MethodRef>& set) {
  json out = json::array();
  for (const auto& r : set) out.push_back(r.str());
  return out;
}

json coordinates(const std::vector<Coordinate>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(c.str());
  return out;
}

std::string_view note_name(depres::TreeNode::Note n) {
  switch (n) {
    case depres::TreeNode::Note::kNone:
      return "";
    case depres::TreeNode::Note::kOmittedForConflict:
      return "omitted-for-conflict";
    case depres::TreeNode::Note::kDuplicate:
      return "duplicate";
    case depres::TreeNode::Note::kCycle:
      return "cycle";
  }
  return "";
}

json finding_json(const compose::Finding& f) {
  return json{
      {"id", f.vuln_id},
      {"libraries", coordinates(f.libraries)},
      {"sink", f.sink.str()},
      {"status", f.reachable ? "reachable" : "not-reachable"},
      {"provenance", f.provenance ? json(std::string(compose::to_string(*f.provenance)))
                                  : json(nullptr)},
      {"witness", f.witness ? refs(*f.witness) : json(nullptr)},
  };
}

json resolution_json(const depres::ResolutionResult& r) {
  json tree = json::array();
  for (const auto& n : r.tree) {
    tree.push_back(json{
        {"coordinate", n.coordinate.str()},
        {"depth", n.depth},
        {"parent", n.parent ? json(*n.parent) : json(nullptr)},
        {"note", n.note == depres::TreeNode::Note::kNone
                     ? json(nullptr)
                     : json(std::string(note_name(n.note)))},
    });
  }
  json coords = json::array();
  for (const auto& c : r.coordinates) coords.push_back(c.str());
  return json{
      {"mode", std::string(depres::to_string(r.mode))},
      {"coordinates", std::move(coords)},
      {"tree", std::move(tree)},
      {"conflicts_mediated", r.conflicts_mediated},
      {"unsatisfied", r.unsatisfied},
      {"diagnostics", r.diagnostics},
  };
}

json comparison_json(const BaselineComparison& c) {
  const auto& m = c.metrics;
  return json{
      {"baseline_mode", std::string(depres::to_string(c.baseline))},
      {"baseline_count", m.baseline_count},
      {"candidate_count", m.candidate_count},
      {"only_in_baseline", coordinates(m.only_in_baseline)},
      {"only_in_candidate", coordinates(m.only_in_candidate)},
      {"percent_change", m.percent_change ? json(*m.percent_change) : json(nullptr)},
      {"undefined_baseline", !m.percent_change.has_value()},
  };
}

json remediation_json(const std::optional<remediate::SemanticDiff>& sem,
                      const std::optional<remediate::BreakingReport>& br) {
  json out = json::object();
  if (sem) {
    json reasons = json::object();
    for (const auto& [m, r] : sem->reasons) {
      reasons[m.str()] = r.kind == remediate::ChangeReason::Kind::kDirect
                             ? json{{"kind", "direct"}}
                             : json{{"kind", "via-callee"}, {"path", refs(r.path)}};
    }
    out["diff"] = json{
        {"from", sem->base.from.str()},
        {"to", sem->base.to.str()},
        {"added", refs(sem->base.added)},
        {"removed", refs(sem->base.removed)},
        {"body_changed", refs(sem->base.body_changed)},
        {"closure", refs(sem->changed_closure)},
        {"reasons", std::move(reasons)},
    };
  }
  if (br) {
    json risky = json::array();
    for (const auto& r : br->risky) {
      risky.push_back(json{{"method", r.method.str()}, {"witness", refs(r.witness)}});
    }
    out["breaking"] = json{
        {"from", br->from.str()},
        {"to", br->to.str()},
        {"graph_mode", std::string(remediate::to_string(br->mode))},
        {"verdict", std::string(remediate::to_string(br->verdict))},
        {"risky", std::move(risky)},
    };
  }
  return out;
}

std::string machine(const FindingsReport& r) {
  json findings = json::array();
  for (const auto& f : r.findings) findings.push_back(finding_json(f));
  json stats = json::object();
  for (const auto& [name, s] : r.stats) {
    stats[name] = json{{"vertices", s.vertices}, {"edges", s.edges}, {"sinks", s.sinks}};
  }
  json root{
      {"command", r.command},
      {"findings", std::move(findings)},
      {"summary", json{{"findings", r.findings.size()}, {"reachable", r.reachable_count()}}},
      {"resolution", r.resolution ? resolution_json(*r.resolution) : json(nullptr)},
      {"comparison", r.comparison ? comparison_json(*r.comparison) : json(nullptr)},
      {"remediation", r.semantic_diff || r.breaking
                          ? remediation_json(r.semantic_diff, r.breaking)
                          : json(nullptr)},
      {"stats", std::move(stats)},
      {"diagnostics", json(r.diagnostics)},
      {"notes", r.notes},
  };
  return root.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

std::string code(const MethodRef& ref) { return "`" + ref.str() + "`"; }

std::string path_text(const std::vector<MethodRef>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += " -> ";
    out += code(path[i]);
  }
  return out;
}

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%+.1f%%", v);
  return buf;
}

std::string human(const FindingsReport& r) {
  std::ostringstream md;
  md << "# SCA report: " << (r.command.empty() ? "(none)" : r.command) << "\n";

  if (!r.findings.empty() || r.command == "reach") {
    md << "\n## Vulnerability findings\n\n"
       << r.findings.size() << " finding(s), " << r.reachable_count()
       << " reachable.\n";
    std::string current;
    for (const auto& f : r.findings) {
      if (f.vuln_id != current) {
        current = f.vuln_id;
        md << "\n### " << f.vuln_id << "\n\n";
        if (!f.libraries.empty()) {
          md << "Affected libraries:";
          for (const auto& c : f.libraries) md << " `" << c.str() << "`";
          md << "\n\n";
        }
      }
      md << "- sink " << code(f.sink) << ": "
         << (f.reachable ? "**reachable**" : "not reachable");
      if (f.provenance) md << " (" << compose::to_string(*f.provenance) << ")";
      md << "\n";
      if (f.witness) md << "  - witness: " << path_text(*f.witness) << "\n";
    }
  }

  if (r.resolution) {
    const auto& res = *r.resolution;
    md << "\n## Dependency resolution\n\n"
       << "Mode `" << depres::to_string(res.mode) << "`: "
       << res.coordinates.size() << " coordinate(s), " << res.conflicts_mediated
       << " conflict(s) mediated, " << res.unsatisfied << " unsatisfied.\n\n";
    for (const auto& c : res.coordinates) md << "- `" << c.str() << "`\n";
    if (!res.diagnostics.empty()) {
      md << "\nDiagnostics:\n\n";
      for (const auto& d : res.diagnostics) md << "- " << d << "\n";
    }
  }

  if (r.comparison) {
    const auto& m = r.comparison->metrics;
    md << "\n## Discovery compared with `"
       << depres::to_string(r.comparison->baseline) << "`\n\n"
       << "Baseline " << m.baseline_count << ", candidate " << m.candidate_count
       << ", change "
       << (m.percent_change ? percent(*m.percent_change) : "undefined (empty baseline)")
       << ".\n";
    for (const auto& c : m.only_in_candidate) md << "- added `" << c.str() << "`\n";
    for (const auto& c : m.only_in_baseline) md << "- missing `" << c.str() << "`\n";
  }

  if (r.breaking) {
    const auto& b = *r.breaking;
    md << "\n## Upgrade advisory: `" << b.from.str() << "` to `" << b.to.str()
       << "`\n\n"
       << "Verdict: **" << remediate::to_string(b.verdict) << "** (graph mode `"
       << remediate::to_string(b.mode) << "`).\n";
    if (r.semantic_diff) {
      const auto& d = r.semantic_diff->base;
      md << "\nChanged: " << d.body_changed.size() << " body, " << d.removed.size()
         << " removed, " << d.added.size() << " added; "
         << r.semantic_diff->changed_closure.size()
         << " method(s) affected through callees.\n";
    }
    if (!b.risky.empty()) {
      md << "\nChanged methods used by the application:\n\n";
      for (const auto& risky : b.risky) {
        md << "- " << code(risky.method) << "\n  - call path: "
           << path_text(risky.witness) << "\n";
      }
    }
  }

  if (!r.stats.empty()) {
    md << "\n## Graph statistics\n\n| graph | vertices | edges | sinks |\n"
       << "|---|---:|---:|---:|\n";
    for (const auto& [name, s] : r.stats) {
      md << "| " << name << " | " << s.vertices << " | " << s.edges << " | "
         << s.sinks << " |\n";
    }
  }

  if (!r.diagnostics.empty()) {
    md << "\n## Diagnostics\n\n| counter | value |\n|---|---:|\n";
    for (const auto& [k, v] : r.diagnostics) md << "| " << k << " | " << v << " |\n";
  }

  if (!r.notes.empty()) {
    md << "\n## Notes\n\n";
    for (const auto& n : r.notes) md << "- " << n << "\n";
  }
  return md.str();
}

}  // namespace

ReportFormat report_format_from_string(std::string_view text) {
  if (text == "json") return ReportFormat::kMachine;
  if (text == "markdown") return ReportFormat::kHuman;
  throw ParseError("unknown report format '" + std::string(text) + "'");
}

std::string emit_report(const FindingsReport& report, ReportFormat format) {
  return format == ReportFormat::kMachine ? machine(report) : human(report);
}

}  // namespace sca::formats
