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

#include "sca/formats.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sca/error.hpp"

namespace sca::formats {

using nlohmann::json;

namespace {

constexpr int kMaxDepth = 64;

json parse_json(std::string_view bytes, const std::string& where) {
  try {
    json::parser_callback_t guard = [](int depth, json::parse_event_t,
                                       json&) -> bool {
      if (depth > kMaxDepth) throw FormatError("$", "nesting too deep");
      return true;
    };
    return json::parse(bytes.begin(), bytes.end(), guard);
  } catch (const json::exception& e) {
    throw FormatError(where, std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const json& j) {
  return j.dump(2, ' ', false, json::error_handler_t::strict) + "\n";
}

std::string key_path(const std::string& path, std::string_view key) {
  return path + "." + std::string(key);
}
std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw FormatError(path, "expected object");
  return j;
}

const json& expect_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw FormatError(path, "expected array");
  return j;
}

const json& member(const json& obj, std::string_view key,
                   const std::string& path) {
  expect_object(obj, path);
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw FormatError(key_path(path, key), "missing required field");
  }
  return *it;
}

/// nullptr when absent or null.
const json* optional_member(const json& obj, std::string_view key,
                            const std::string& path) {
  expect_object(obj, path);
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw FormatError(path, "expected string");
  return j.get<std::string>();
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw FormatError(path, "expected boolean");
  return j.get<bool>();
}

std::string string_member(const json& obj, std::string_view key,
                          const std::string& path) {
  return as_string(member(obj, key, path), key_path(path, key));
}

std::vector<std::string> string_array(const json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_string(j[i], index_path(path, i)));
  }
  return out;
}

/// Runs a text parser and rethrows its ParseError at `path`.
template <typename F>
auto at(const std::string& path, F&& parse) -> decltype(parse()) {
  try {
    return parse();
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(path, e.what());
  }
}

MethodRef ref_at(const json& j, const std::string& path) {
  std::string text = as_string(j, path);
  return at(path, [&] { return MethodRef::parse(text); });
}

MethodRef ref_member(const json& obj, std::string_view key,
                     const std::string& path) {
  return ref_at(member(obj, key, path), key_path(path, key));
}

std::vector<MethodRef> ref_array(const json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<MethodRef> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(ref_at(j[i], index_path(path, i)));
  }
  return out;
}

json ref_array_json(const std::vector<MethodRef>& refs) {
  json arr = json::array();
  for (const auto& r : refs) arr.push_back(r.str());
  return arr;
}

Coordinate coordinate_member(const json& obj, std::string_view key,
                             const std::string& path) {
  std::string text = string_member(obj, key, path);
  return at(key_path(path, key), [&] { return Coordinate::parse(text); });
}

/// Wraps a whole-document loader so that no library exception escapes.
template <typename F>
auto guarded(F&& load) -> decltype(load()) {
  try {
    return load();
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError("$", e.what());
  } catch (const json::exception& e) {
    throw FormatError("$", e.what());
  }
}

// ---------------------------------------------------------------------------
// program.json

CallSite load_call(const json& j, const std::string& path) {
  const std::string kind = string_member(j, "kind", path);
  if (kind == "static" || kind == "direct") {
    return DirectCall{ref_member(j, "target", path)};
  }
  if (kind == "virtual") {
    VirtualCall v{string_member(j, "receiver", path),
                  string_member(j, "method", path),
                  string_member(j, "descriptor", path)};
    if (v.receiver.empty()) {
      throw FormatError(key_path(path, "receiver"), "empty receiver type");
    }
    return v;
  }
  if (kind == "reflective") {
    ReflectiveCall r;
    if (const json* c = optional_member(j, "class", path)) {
      r.class_const = as_string(*c, key_path(path, "class"));
    }
    if (const json* m = optional_member(j, "method", path)) {
      r.method_const = as_string(*m, key_path(path, "method"));
    }
    return r;
  }
  throw FormatError(key_path(path, "kind"), "unknown call kind '" + kind + "'");
}

json save_call(const CallSite& site) {
  json j = json::object();
  if (const auto* d = std::get_if<DirectCall>(&site)) {
    j["kind"] = "static";
    j["target"] = d->target.str();
  } else if (const auto* v = std::get_if<VirtualCall>(&site)) {
    j["kind"] = "virtual";
    j["receiver"] = v->receiver;
    j["method"] = v->method_name;
    j["descriptor"] = v->descriptor;
  } else {
    const auto& r = std::get<ReflectiveCall>(site);
    j["kind"] = "reflective";
    j["class"] = r.class_const ? json(*r.class_const) : json(nullptr);
    j["method"] = r.method_const ? json(*r.method_const) : json(nullptr);
  }
  return j;
}

MethodModel load_method(const json& j, const std::string& cls,
                        const std::string& path) {
  const std::string name = string_member(j, "name", path);
  const std::string descriptor = string_member(j, "descriptor", path);
  MethodModel m{at(path, [&] { return MethodRef(cls, name, descriptor); }), Visibility::kPublic,
                false, {}, {}, {}};
  if (const json* v = optional_member(j, "visibility", path)) {
    std::string text = as_string(*v, key_path(path, "visibility"));
    m.visibility =
        at(key_path(path, "visibility"), [&] { return visibility_from_string(text); });
  }
  if (const json* s = optional_member(j, "static", path)) {
    m.is_static = as_bool(*s, key_path(path, "static"));
  }
  if (const json* d = optional_member(j, "body_digest", path)) {
    m.body_digest = as_string(*d, key_path(path, "body_digest"));
  }
  if (const json* n = optional_member(j, "instantiates", path)) {
    m.instantiates = string_array(*n, key_path(path, "instantiates"));
  }
  if (const json* calls = optional_member(j, "calls", path)) {
    const std::string cpath = key_path(path, "calls");
    expect_array(*calls, cpath);
    for (std::size_t i = 0; i < calls->size(); ++i) {
      m.call_sites.push_back(load_call((*calls)[i], index_path(cpath, i)));
    }
  }
  return m;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing " + path.string());
}

ProgramDocument load_program(std::string_view bytes) {
  return guarded([&] {
    const json root = parse_json(bytes, "$");
    ProgramDocument doc;
    const json& origin = member(root, "origin", "$");
    if (origin.is_string() && origin.get<std::string>() == "application") {
      // application
    } else if (origin.is_object()) {
      doc.library = coordinate_member(origin, "library", "$.origin");
    } else {
      throw FormatError("$.origin",
                        "expected \"application\" or {\"library\": coordinate}");
    }

    const json& classes = expect_array(member(root, "classes", "$"), "$.classes");
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      const std::string cpath = index_path("$.classes", ci);
      const json& c = classes[ci];
      ClassModel cls;
      cls.name = string_member(c, "name", cpath);
      if (!is_valid_class_name(cls.name)) {
        throw FormatError(key_path(cpath, "name"),
                          "invalid class name '" + cls.name + "'");
      }
      if (const json* s = optional_member(c, "superclass", cpath)) {
        cls.superclass = as_string(*s, key_path(cpath, "superclass"));
      }
      if (const json* i = optional_member(c, "interfaces", cpath)) {
        cls.interfaces = string_array(*i, key_path(cpath, "interfaces"));
      }
      if (const json* a = optional_member(c, "abstract", cpath)) {
        cls.is_abstract = as_bool(*a, key_path(cpath, "abstract"));
      }
      if (const json* ms = optional_member(c, "methods", cpath)) {
        const std::string mpath = key_path(cpath, "methods");
        expect_array(*ms, mpath);
        for (std::size_t mi = 0; mi < ms->size(); ++mi) {
          cls.methods.push_back(
              load_method((*ms)[mi], cls.name, index_path(mpath, mi)));
        }
      }
      doc.classes.push_back(std::move(cls));
    }
    doc.validate();
    return doc;
  });
}

std::string save_program(const ProgramDocument& doc) {
  json root = json::object();
  if (doc.library) {
    root["origin"] = json{{"library", doc.library->str()}};
  } else {
    root["origin"] = "application";
  }
  json classes = json::array();
  for (const auto& cls : doc.classes) {
    json c = json::object();
    c["name"] = cls.name;
    c["superclass"] = cls.superclass ? json(*cls.superclass) : json(nullptr);
    c["interfaces"] = cls.interfaces;
    c["abstract"] = cls.is_abstract;
    json methods = json::array();
    for (const auto& m : cls.methods) {
      json calls = json::array();
      for (const auto& site : m.call_sites) calls.push_back(save_call(site));
      methods.push_back(json{
          {"name", std::string(m.ref.method_name())},
          {"descriptor", std::string(m.ref.descriptor())},
          {"visibility", std::string(to_string(m.visibility))},
          {"static", m.is_static},
          {"body_digest", m.body_digest},
          {"instantiates", m.instantiates},
          {"calls", std::move(calls)},
      });
    }
    c["methods"] = std::move(methods);
    classes.push_back(std::move(c));
  }
  root["classes"] = std::move(classes);
  return dump(root);
}

// ---------------------------------------------------------------------------
// trace.jsonl

TraceDocument load_trace(std::string_view bytes) {
  TraceDocument doc;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < bytes.size()) {
    std::size_t end = bytes.find('\n', start);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const std::string where = "line " + std::to_string(line_no);
    try {
      const json j = parse_json(line, where);
      doc.events.push_back(
          {ref_member(j, "caller", "$"), ref_member(j, "callee", "$")});
    } catch (const FormatError& e) {
      if (e.where().starts_with("line ")) throw;
      throw FormatError(where, e.what());
    } catch (const json::exception& e) {
      throw FormatError(where, e.what());
    }
  }
  return doc;
}

std::string save_trace(const TraceDocument& doc) {
  std::string out;
  for (const auto& e : doc.events) {
    out += json{{"callee", e.callee.str()}, {"caller", e.caller.str()}}.dump();
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// registry.json, manifest.json, lockfile.json

namespace {

Dependency load_dependency(const json& j, const std::string& path) {
  const std::string pkg = string_member(j, "package", path);
  const std::string constraint = string_member(j, "constraint", path);
  return Dependency{
      at(key_path(path, "package"), [&] { return PackageKey::parse(pkg); }),
      at(key_path(path, "constraint"),
         [&] { return Constraint::parse(constraint); })};
}

json save_dependencies(const std::vector<Dependency>& deps) {
  json arr = json::array();
  for (const auto& d : deps) {
    arr.push_back(json{{"package", d.package.str()},
                       {"constraint", d.constraint.str()}});
  }
  return arr;
}

}  // namespace

RegistryDocument load_registry(std::string_view bytes) {
  return guarded([&] {
    const json root = parse_json(bytes, "$");
    const json& packages = expect_object(member(root, "packages", "$"), "$.packages");
    RegistryDocument doc;
    for (const auto& [pkg_text, versions] : packages.items()) {
      const std::string ppath = "$.packages." + pkg_text;
      PackageKey key = at(ppath, [&] { return PackageKey::parse(pkg_text); });
      expect_object(versions, ppath);
      auto& by_version = doc.packages[key];
      for (const auto& [ver_text, deps] : versions.items()) {
        const std::string vpath = ppath + "." + ver_text;
        Version version = at(vpath, [&] { return Version::parse(ver_text); });
        expect_array(deps, vpath);
        std::vector<Dependency> list;
        std::set<PackageKey> seen;
        for (std::size_t i = 0; i < deps.size(); ++i) {
          Dependency d = load_dependency(deps[i], index_path(vpath, i));
          if (d.package == key && d.constraint.satisfied_by(version)) {
            throw FormatError(index_path(vpath, i),
                              "self-dependency at " + key.str() + ":" +
                                  version.str());
          }
          if (!seen.insert(d.package).second) {
            throw FormatError(index_path(vpath, i),
                              "duplicate dependency " + d.package.str());
          }
          list.push_back(std::move(d));
        }
        if (!by_version.emplace(version, std::move(list)).second) {
          throw FormatError(vpath, "duplicate version " + version.str());
        }
      }
    }
    return doc;
  });
}

std::string save_registry(const RegistryDocument& doc) {
  json packages = json::object();
  for (const auto& [key, versions] : doc.packages) {
    json v = json::object();
    for (const auto& [version, deps] : versions) {
      v[version.str()] = save_dependencies(deps);
    }
    packages[key.str()] = std::move(v);
  }
  return dump(json{{"packages", std::move(packages)}});
}

ManifestDocument load_manifest(std::string_view bytes) {
  return guarded([&] {
    const json root = parse_json(bytes, "$");
    const json& deps =
        expect_array(member(root, "dependencies", "$"), "$.dependencies");
    ManifestDocument doc;
    std::set<PackageKey> seen;
    for (std::size_t i = 0; i < deps.size(); ++i) {
      const std::string path = index_path("$.dependencies", i);
      Dependency d = load_dependency(deps[i], path);
      if (!seen.insert(d.package).second) {
        throw FormatError(path, "duplicate dependency " + d.package.str());
      }
      doc.dependencies.push_back(std::move(d));
    }
    return doc;
  });
}

std::string save_manifest(const ManifestDocument& doc) {
  return dump(json{{"dependencies", save_dependencies(doc.dependencies)}});
}

Lockfile load_lockfile(std::string_view bytes) {
  return guarded([&] {
    const json root = parse_json(bytes, "$");
    const json& entries = expect_array(member(root, "entries", "$"), "$.entries");
    Lockfile doc;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string path = index_path("$.entries", i);
      Lockfile::Entry e{coordinate_member(entries[i], "coordinate", path), {}};
      if (const json* p = optional_member(entries[i], "parent", path)) {
        std::string text = as_string(*p, key_path(path, "parent"));
        e.parent = at(key_path(path, "parent"),
                      [&] { return Coordinate::parse(text); });
      }
      doc.entries.push_back(std::move(e));
    }
    return doc;
  });
}

std::string save_lockfile(const Lockfile& doc) {
  json entries = json::array();
  for (const auto& e : doc.entries) {
    entries.push_back(
        json{{"coordinate", e.coordinate.str()},
             {"parent", e.parent ? json(e.parent->str()) : json(nullptr)}});
  }
  return dump(json{{"entries", std::move(entries)}});
}

// ---------------------------------------------------------------------------
// vulndb.json

VulnDbDocument load_vulndb(std::string_view bytes) {
  return guarded([&] {
    const json root = parse_json(bytes, "$");
    const json& records =
        expect_array(member(root, "vulnerabilities", "$"), "$.vulnerabilities");
    VulnDbDocument doc;
    std::set<std::string> ids;
    for (std::size_t i = 0; i < records.size(); ++i) {
      const std::string path = index_path("$.vulnerabilities", i);
      const json& r = records[i];
      VulnRecord rec;
      rec.id = string_member(r, "id", path);
      if (rec.id.empty()) throw FormatError(key_path(path, "id"), "empty id");
      if (!ids.insert(rec.id).second) {
        throw FormatError(key_path(path, "id"), "duplicate id " + rec.id);
      }
      const std::string pkg = string_member(r, "package", path);
      rec.package = at(key_path(path, "package"),
                       [&] { return PackageKey::parse(pkg); });
      const std::string range = string_member(r, "affected", path);
      rec.affected = at(key_path(path, "affected"), [&] {
        try {
          return Constraint::parse(range);
        } catch (const ParseError& e) {
          throw ParseError(std::string(e.what()) + " (package " + pkg + ")");
        }
      });
      rec.sinks = ref_array(member(r, "sinks", path), key_path(path, "sinks"));
      if (rec.sinks.empty()) {
        throw FormatError(key_path(path, "sinks"), "sink list is empty");
      }
      doc.records.push_back(std::move(rec));
    }
    return doc;
  });
}

std::string save_vulndb(const VulnDbDocument& doc) {
  json records = json::array();
  for (const auto& r : doc.records) {
    records.push_back(json{{"id", r.id},
                           {"package", r.package.str()},
                           {"affected", r.affected.str()},
                           {"sinks", ref_array_json(r.sinks)}});
  }
  return dump(json{{"vulnerabilities", std::move(records)}});
}

// ---------------------------------------------------------------------------
// chains.json

ChainFile load_chains(std::string_view bytes) {
  return guarded([&] {
    const json root = parse_json(bytes, "$");
    ChainFile file{coordinate_member(root, "library", "$"), {}, {}, {}, {}};
    const json& chains = expect_array(member(root, "chains", "$"), "$.chains");
    for (std::size_t i = 0; i < chains.size(); ++i) {
      const std::string path = index_path("$.chains", i);
      const json& edges_json =
          expect_array(member(chains[i], "edges", path), key_path(path, "edges"));
      std::vector<ChainEdge> edges;
      for (std::size_t k = 0; k < edges_json.size(); ++k) {
        const std::string epath = index_path(key_path(path, "edges"), k);
        edges.push_back({ref_member(edges_json[k], "caller", epath),
                         ref_member(edges_json[k], "callee", epath)});
      }
      const MethodRef sink = ref_member(chains[i], "sink", path);
      CallChain chain = at(path, [&] {
        try {
          return CallChain(std::move(edges), file.library);
        } catch (const Error& e) {
          throw Error("chain " + std::to_string(i) + ": " + e.what());
        }
      });
      if (chain.sink() != sink) {
        throw FormatError(key_path(path, "sink"),
                          "chain " + std::to_string(i) + " ends at " +
                              chain.sink().str() + ", not at its sink");
      }
      file.chains.push_back(std::move(chain));
    }
    auto list = [&](std::string_view key) {
      const json* j = optional_member(root, key, "$");
      return j ? ref_array(*j, key_path("$", key)) : std::vector<MethodRef>{};
    };
    file.truncated_sinks = list("truncated_sinks");
    file.missing_sinks = list("missing_sinks");
    file.unreachable_sinks = list("unreachable_sinks");
    return file;
  });
}

std::string save_chains(const ChainFile& file) {
  json chains = json::array();
  for (const auto& chain : file.chains) {
    json edges = json::array();
    for (const auto& e : chain.edges()) {
      edges.push_back(json{{"caller", e.caller.str()}, {"callee", e.callee.str()}});
    }
    chains.push_back(json{{"sink", chain.sink().str()}, {"edges", std::move(edges)}});
  }
  return dump(json{{"library", file.library.str()},
                   {"chains", std::move(chains)},
                   {"truncated_sinks", ref_array_json(file.truncated_sinks)},
                   {"missing_sinks", ref_array_json(file.missing_sinks)},
                   {"unreachable_sinks", ref_array_json(file.unreachable_sinks)}});
}

// ---------------------------------------------------------------------------
// graph.json

GraphDocument load_graph(std::string_view bytes) {
  return guarded([&] {
    const json root = parse_json(bytes, "$");
    GraphBuilder b;
    const json& vertices =
        expect_array(member(root, "vertices", "$"), "$.vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const std::string path = index_path("$.vertices", i);
      MethodRef ref = ref_member(vertices[i], "ref", path);
      const std::string origin = string_member(vertices[i], "origin", path);
      if (!b.add_vertex(ref, at(key_path(path, "origin"),
                                [&] { return Origin::parse(origin); }))) {
        throw FormatError(path, "duplicate vertex " + ref.str());
      }
    }
    const json& edges = expect_array(member(root, "edges", "$"), "$.edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string path = index_path("$.edges", i);
      MethodRef caller = ref_member(edges[i], "caller", path);
      MethodRef callee = ref_member(edges[i], "callee", path);
      if (!b.view().has_vertex(caller) || !b.view().has_vertex(callee)) {
        throw FormatError(path, "edge endpoint is not a vertex");
      }
      const std::vector<std::string> provs = string_array(
          member(edges[i], "provenance", path), key_path(path, "provenance"));
      if (provs.empty()) {
        throw FormatError(key_path(path, "provenance"), "empty provenance");
      }
      ProvenanceSet set;
      for (const auto& p : provs) {
        set |= at(key_path(path, "provenance"),
                  [&] { return provenance_from_string(p); });
      }
      if (!b.add_edge(caller, callee, set)) {
        throw FormatError(path, "duplicate edge");
      }
    }
    GraphDocument doc;
    if (const json* eps = optional_member(root, "entry_points", "$")) {
      for (auto& r : ref_array(*eps, "$.entry_points")) {
        if (!b.view().has_vertex(r)) {
          throw FormatError("$.entry_points", "entry point is not a vertex: " + r.str());
        }
        doc.entry_points.methods.insert(std::move(r));
      }
    }
    doc.graph = std::move(b).build();
    return doc;
  });
}

std::string save_graph(const GraphDocument& doc) {
  json vertices = json::array();
  for (const auto& [ref, origin] : doc.graph.vertices()) {
    vertices.push_back(json{{"ref", ref.str()}, {"origin", origin.str()}});
  }
  json edges = json::array();
  for (const auto& e : doc.graph.edges()) {
    json provs = json::array();
    for (Provenance p : e.provenance.members()) provs.push_back(to_string(p));
    edges.push_back(json{{"caller", e.caller.str()},
                         {"callee", e.callee.str()},
                         {"provenance", std::move(provs)}});
  }
  json eps = json::array();
  for (const auto& r : doc.entry_points.methods) eps.push_back(r.str());
  return dump(json{{"vertices", std::move(vertices)},
                   {"edges", std::move(edges)},
                   {"entry_points", std::move(eps)}});
}

}  // namespace sca::formats
