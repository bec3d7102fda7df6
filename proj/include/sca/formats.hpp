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

#include <filesystem>
#include <string>
#include <string_view>

#include "sca/call_graph.hpp"
#include "sca/documents.hpp"
#include "sca/program.hpp"

/// Interchange documents. Every loader validates the document invariants
/// and reports failures as FormatError carrying a `$.json.path` (or
/// `line N` for traces); no input, however malformed, escapes as anything
/// else. Every saver emits sorted keys with two-space indentation and a
/// trailing newline, so `save(load(save(x))) == save(x)` byte for byte.
///
/// Schemas are documented in docs/formats.md.
namespace sca::formats {

/// Whole file as bytes. Throws Error if unreadable.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

ProgramDocument load_program(std::string_view bytes);
std::string save_program(const ProgramDocument& doc);

/// One JSON object per line: {"caller": ref, "callee": ref}. Blank lines
/// are skipped; other keys (timestamps, thread ids) are ignored.
TraceDocument load_trace(std::string_view bytes);
std::string save_trace(const TraceDocument& doc);

RegistryDocument load_registry(std::string_view bytes);
std::string save_registry(const RegistryDocument& doc);

ManifestDocument load_manifest(std::string_view bytes);
std::string save_manifest(const ManifestDocument& doc);

Lockfile load_lockfile(std::string_view bytes);
std::string save_lockfile(const Lockfile& doc);

VulnDbDocument load_vulndb(std::string_view bytes);
std::string save_vulndb(const VulnDbDocument& doc);

ChainFile load_chains(std::string_view bytes);
std::string save_chains(const ChainFile& file);

/// A call graph together with the entry points it was rooted at.
struct GraphDocument {
  CallGraph graph;
  EntryPointSet entry_points;
  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

GraphDocument load_graph(std::string_view bytes);
std::string save_graph(const GraphDocument& doc);

}  // namespace sca::formats
