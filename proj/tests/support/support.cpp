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

#include "support.hpp"

#include <algorithm>
#include <functional>

#include "sca/formats.hpp"

namespace sca::testing {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[uniform(rng, 0, v.size() - 1)];
}

Coordinate lib_coordinate(std::size_t lib) {
  return Coordinate::parse("org.example:lib" + std::to_string(lib) + ":1.0.0");
}

}  // namespace

std::filesystem::path fixture_dir() { return SCA_FIXTURE_DIR; }

std::filesystem::path fixture(const std::string& relative) {
  return fixture_dir() / relative;
}

std::string read_fixture(const std::string& relative) {
  return formats::read_file(fixture(relative));
}

MethodRef ref(const std::string& text) { return MethodRef::parse(text); }

std::set<MethodRef> refs(std::initializer_list<const char*> texts) {
  std::set<MethodRef> out;
  for (const char* t : texts) out.insert(MethodRef::parse(t));
  return out;
}

std::set<MethodRef> vertex_set(const CallGraph& g) {
  std::set<MethodRef> out;
  for (const auto& [v, _] : g.vertices()) out.insert(v);
  return out;
}

std::set<std::pair<MethodRef, MethodRef>> edge_set(const CallGraph& g) {
  std::set<std::pair<MethodRef, MethodRef>> out;
  for (const auto& e : g.edges()) out.emplace(e.caller, e.callee);
  return out;
}

// ---------------------------------------------------------------------------
// Generators

RandomAppGraph random_app_graph(Rng& rng, std::size_t max_vertices) {
  const std::size_t n = uniform(rng, 3, std::max<std::size_t>(3, max_vertices));
  const std::size_t roots = uniform(rng, 1, std::min<std::size_t>(3, n - 1));
  std::vector<MethodRef> order;
  std::vector<bool> first_party;
  RandomAppGraph out;
  GraphBuilder b;
  for (std::size_t i = 0; i < roots; ++i) {
    MethodRef r = testing::ref("com.app.R" + std::to_string(i) + ".main()V");
    b.add_vertex(r, Origin::first_party());
    out.roots.methods.insert(r);
    order.push_back(r);
    first_party.push_back(true);
  }
  for (std::size_t i = roots; i < n; ++i) {
    const bool fp = chance(rng, 0.6);
    const std::size_t lib = uniform(rng, 0, 1);
    MethodRef v = fp ? testing::ref("com.app.C" + std::to_string(i) + ".m()V")
                     : testing::ref("org.lib" + std::to_string(lib) + ".T" + std::to_string(i) +
                           ".t()V");
    b.add_vertex(v, fp ? Origin::first_party() : Origin::third_party(lib_coordinate(lib)));
    if (!fp) out.library_vertices.push_back(v);
    // One caller among earlier first-party vertices keeps v reachable.
    std::vector<std::size_t> callers;
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (first_party[j]) callers.push_back(j);
    }
    b.add_edge(order[pick(rng, callers)], v, Provenance::kStatic);
    order.push_back(v);
    first_party.push_back(fp);
  }
  const std::size_t extra = uniform(rng, 0, n);
  for (std::size_t k = 0; k < extra; ++k) {
    const std::size_t from = uniform(rng, 0, n - 1);
    const std::size_t to = uniform(rng, roots, n - 1);
    if (!first_party[from] || from == to) continue;
    b.add_edge(order[from], order[to], Provenance::kStatic);
  }
  out.graph = std::move(b).build();
  return out;
}

std::vector<ChainFile> random_chain_files(Rng& rng, const RandomAppGraph& app,
                                          std::size_t max_new_vertices) {
  std::vector<ChainFile> files;
  const std::size_t fresh = uniform(rng, 1, std::max<std::size_t>(1, max_new_vertices));
  std::vector<std::vector<MethodRef>> pools(2);
  for (const auto& v : app.library_vertices) {
    const std::string lib(v.class_name().substr(7, 1));  // "org.lib<L>."
    pools[lib == "0" ? 0 : 1].push_back(v);
  }
  for (std::size_t j = 0; j < fresh; ++j) {
    const std::size_t lib = uniform(rng, 0, 1);
    pools[lib].push_back(testing::ref("org.lib" + std::to_string(lib) + ".N" + std::to_string(j) +
                             ".n()V"));
  }
  for (std::size_t lib = 0; lib < 2; ++lib) {
    if (pools[lib].size() < 2) continue;
    ChainFile f{lib_coordinate(lib), {}, {}, {}, {}};
    const std::size_t count = uniform(rng, 0, 5);
    for (std::size_t c = 0; c < count; ++c) {
      std::vector<MethodRef> pool = pools[lib];
      std::shuffle(pool.begin(), pool.end(), rng);
      const std::size_t len = uniform(rng, 2, std::min<std::size_t>(6, pool.size()));
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(len), pool.end());
      f.chains.push_back(CallChain::from_path(pool, f.library));
    }
    files.push_back(std::move(f));
  }
  return files;
}

CallGraph random_digraph(Rng& rng, std::size_t n, double edge_probability) {
  GraphBuilder b;
  std::vector<MethodRef> vs;
  for (std::size_t i = 0; i < n; ++i) {
    vs.push_back(testing::ref("g.N" + std::to_string(i) + ".m()V"));
    b.add_vertex(vs.back(), Origin::first_party());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && chance(rng, edge_probability)) {
        b.add_edge(vs[i], vs[j], Provenance::kStatic);
      }
    }
  }
  return std::move(b).build();
}

ProgramDocument random_hierarchy_program(Rng& rng, std::size_t max_classes) {
  struct Sig {
    const char* name;
    const char* desc;
  };
  static const std::vector<Sig> kSigs{{"m", "()V"}, {"n", "()V"}, {"m", "(I)V"}};
  const std::size_t n = uniform(rng, 2, std::max<std::size_t>(2, max_classes - 1));

  ProgramDocument doc;
  std::vector<std::string> names;
  std::vector<std::string> interfaces;
  std::vector<std::string> classes;
  for (std::size_t i = 0; i < n; ++i) {
    ClassModel c;
    c.name = "p.K" + std::to_string(i);
    const double kind = std::uniform_real_distribution<double>(0, 1)(rng);
    if (kind < 0.2) {
      // Interfaces carry no methods, so dispatch never falls back to them.
      c.is_abstract = true;
      for (const auto& i2 : interfaces) {
        if (chance(rng, 0.3)) c.interfaces.push_back(i2);
      }
      interfaces.push_back(c.name);
    } else {
      c.is_abstract = kind < 0.4;
      const double sup = std::uniform_real_distribution<double>(0, 1)(rng);
      if (sup < 0.15) {
        c.superclass = "ext.Base";
      } else if (sup < 0.65 && !classes.empty()) {
        c.superclass = pick(rng, classes);
      }
      for (const auto& i2 : interfaces) {
        if (chance(rng, 0.35)) c.interfaces.push_back(i2);
      }
      for (const auto& s : kSigs) {
        if (chance(rng, 0.5)) {
          MethodModel m{MethodRef(c.name, s.name, s.desc)};
          m.body_digest = c.name + s.name;
          c.methods.push_back(std::move(m));
        }
      }
      classes.push_back(c.name);
    }
    names.push_back(c.name);
    doc.classes.push_back(std::move(c));
  }

  std::vector<std::string> receivers = names;
  receivers.push_back("ext.Api");
  std::vector<MethodRef> declared;
  for (const auto& c : doc.classes) {
    for (const auto& m : c.methods) declared.push_back(m.ref);
  }
  auto add_sites = [&](MethodModel& m, std::size_t max_sites) {
    const std::size_t sites = uniform(rng, 0, max_sites);
    for (std::size_t s = 0; s < sites; ++s) {
      const double kind = std::uniform_real_distribution<double>(0, 1)(rng);
      if (kind < 0.7) {
        const Sig& sig = pick(rng, kSigs);
        m.call_sites.push_back(VirtualCall{pick(rng, receivers), sig.name, sig.desc});
      } else if (kind < 0.85 && !declared.empty()) {
        m.call_sites.push_back(DirectCall{pick(rng, declared)});
      } else {
        m.call_sites.push_back(DirectCall{ref("ext.Util.f()V")});
      }
    }
    for (const auto& c : classes) {
      if (chance(rng, 0.25)) m.instantiates.push_back(c);
    }
  };
  for (auto& c : doc.classes) {
    for (auto& m : c.methods) add_sites(m, 2);
  }
  ClassModel main_cls;
  main_cls.name = "p.Main";
  MethodModel main_m{ref("p.Main.main()V")};
  main_m.is_static = true;
  add_sites(main_m, 4);
  main_cls.methods.push_back(std::move(main_m));
  doc.classes.push_back(std::move(main_cls));
  doc.validate();
  return doc;
}

ProgramDocument random_library_program(Rng& rng, std::size_t max_methods) {
  const std::size_t n = uniform(rng, 2, std::max<std::size_t>(2, max_methods - 1));
  ProgramDocument doc;
  doc.library = Coordinate::parse("org.example:rlib:1.0.0");
  const std::size_t class_count = uniform(rng, 1, 3);
  for (std::size_t c = 0; c < class_count; ++c) {
    ClassModel cls;
    cls.name = "l.C" + std::to_string(c);
    doc.classes.push_back(std::move(cls));
  }
  std::vector<MethodRef> methods;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = uniform(rng, 0, class_count - 1);
    MethodModel m{MethodRef(doc.classes[c].name, "f" + std::to_string(i), "()V")};
    m.is_static = true;
    m.visibility = chance(rng, 0.4) ? Visibility::kPublic : Visibility::kPrivate;
    methods.push_back(m.ref);
    doc.classes[c].methods.push_back(std::move(m));
  }
  const double density = std::uniform_real_distribution<double>(0.1, 0.4)(rng);
  for (auto& cls : doc.classes) {
    for (auto& m : cls.methods) {
      for (const auto& t : methods) {
        if (t != m.ref && chance(rng, density)) m.call_sites.push_back(DirectCall{t});
      }
      if (chance(rng, 0.1)) m.call_sites.push_back(DirectCall{ref("ext.Sys.x()V")});
    }
  }
  doc.validate();
  return doc;
}

std::pair<RegistryDocument, ManifestDocument> random_registry(Rng& rng,
                                                              std::size_t max_packages,
                                                              std::size_t max_versions) {
  static const std::vector<std::string> kVersions{"1.0.0", "1.1.0", "1.2.0",
                                                  "2.0.0", "2.1.0", "3.0.0"};
  static const std::vector<std::string> kConstraints{
      "*",      "^1.0.0", "~1.1.0", ">=1.1.0 <2.1.0", "=2.0.0",
      "1.0.0",  "^2.0.0", "<2.0.0", ">1.0.0",         "^4.0.0"};
  const std::size_t n = uniform(rng, 1, max_packages);
  std::vector<PackageKey> pkgs;
  for (std::size_t i = 0; i < n; ++i) pkgs.push_back({"g", "p" + std::to_string(i)});

  auto random_deps = [&](const PackageKey& self, std::size_t max_deps) {
    std::vector<Dependency> deps;
    std::vector<PackageKey> pool;
    for (const auto& p : pkgs) {
      if (p != self) pool.push_back(p);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t k = std::min(pool.size(), uniform(rng, 0, max_deps));
    for (std::size_t i = 0; i < k; ++i) {
      deps.push_back({pool[i], Constraint::parse(pick(rng, kConstraints))});
    }
    return deps;
  };

  RegistryDocument reg;
  for (const auto& p : pkgs) {
    std::vector<std::string> vs = kVersions;
    std::shuffle(vs.begin(), vs.end(), rng);
    const std::size_t k = uniform(rng, 1, std::min(max_versions, vs.size()));
    for (std::size_t i = 0; i < k; ++i) {
      reg.packages[p][Version::parse(vs[i])] = random_deps(p, 3);
    }
  }
  ManifestDocument manifest;
  manifest.dependencies = random_deps(PackageKey{"root", "root"}, 4);
  return {std::move(reg), std::move(manifest)};
}

// ---------------------------------------------------------------------------
// Oracles

std::set<MethodRef> dfs_reachable(const CallGraph& g, const std::set<MethodRef>& roots) {
  std::set<MethodRef> seen;
  std::function<void(const MethodRef&)> visit = [&](const MethodRef& v) {
    if (!g.has_vertex(v) || !seen.insert(v).second) return;
    for (const auto& [w, _] : g.successors(v)) visit(w);
  };
  for (const auto& r : roots) visit(r);
  return seen;
}

std::set<std::pair<MethodRef, MethodRef>> brute_force_cha(const ProgramDocument& p) {
  std::map<std::string, const ClassModel*> byname;
  for (const auto& c : p.classes) byname[c.name] = &c;

  // subtypes[a] contains b when b is a (reflexive, transitive) subtype of a.
  std::map<std::string, std::set<std::string>> subtypes;
  for (const auto& c : p.classes) subtypes[c.name].insert(c.name);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : p.classes) {
      std::vector<std::string> parents = c.interfaces;
      if (c.superclass) parents.push_back(*c.superclass);
      for (const auto& parent : parents) {
        if (!byname.contains(parent)) continue;
        for (const auto& sub : std::set<std::string>(subtypes[c.name])) {
          changed |= subtypes[parent].insert(sub).second;
        }
      }
    }
  }

  auto dispatch = [&](const std::string& cls, std::string_view name,
                      std::string_view desc) -> std::optional<MethodRef> {
    std::string cur = cls;
    while (true) {
      auto it = byname.find(cur);
      if (it == byname.end()) return MethodRef(cur, name, desc);
      if (const MethodModel* m = it->second->find_method(name, desc)) return m->ref;
      if (!it->second->superclass) return std::nullopt;
      cur = *it->second->superclass;
    }
  };

  std::set<std::pair<MethodRef, MethodRef>> out;
  for (const auto& c : p.classes) {
    for (const auto& m : c.methods) {
      for (const auto& site : m.call_sites) {
        if (const auto* d = std::get_if<DirectCall>(&site)) {
          out.emplace(m.ref, d->target);
        } else if (const auto* v = std::get_if<VirtualCall>(&site)) {
          if (!byname.contains(v->receiver)) {
            out.emplace(m.ref, MethodRef(v->receiver, v->method_name, v->descriptor));
            continue;
          }
          if (auto t = dispatch(v->receiver, v->method_name, v->descriptor)) {
            out.emplace(m.ref, *t);
          }
          for (const auto& sub : subtypes[v->receiver]) {
            if (byname.at(sub)->is_abstract) continue;
            if (auto t = dispatch(sub, v->method_name, v->descriptor)) {
              out.emplace(m.ref, *t);
            }
          }
        }
      }
    }
  }
  return out;
}

std::set<std::vector<MethodRef>> brute_force_simple_paths(
    const CallGraph& g, const std::set<MethodRef>& entries, const MethodRef& sink) {
  std::set<std::vector<MethodRef>> out;
  std::vector<MethodRef> path;
  std::function<void(const MethodRef&)> walk = [&](const MethodRef& v) {
    if (std::find(path.begin(), path.end(), v) != path.end()) return;
    path.push_back(v);
    if (v == sink) {
      if (path.size() > 1) out.insert(path);
    } else {
      for (const auto& [w, _] : g.successors(v)) walk(w);
    }
    path.pop_back();
  };
  for (const auto& e : entries) {
    if (g.has_vertex(e)) walk(e);
  }
  return out;
}

std::optional<std::map<PackageKey, Version>> maven_oracle(const ManifestDocument& m,
                                                          const RegistryDocument& r) {
  std::map<PackageKey, Version> chosen;
  std::map<PackageKey, std::size_t> depth_table;
  bool unknown = false;

  std::function<void(const std::vector<Dependency>&, std::size_t)> level =
      [&](const std::vector<Dependency>& occurrences, std::size_t depth) {
        std::vector<Dependency> next;
        for (const auto& occ : occurrences) {
          auto pkg = r.packages.find(occ.package);
          if (pkg == r.packages.end()) {
            unknown = true;
            return;
          }
          if (depth_table.contains(occ.package)) continue;
          std::optional<Version> best;
          for (const auto& [v, _] : pkg->second) {
            if (occ.constraint.satisfied_by(v) && (!best || *best < v)) best = v;
          }
          if (!best) continue;
          depth_table[occ.package] = depth;
          chosen[occ.package] = *best;
          const auto& deps = pkg->second.at(*best);
          next.insert(next.end(), deps.begin(), deps.end());
        }
        if (!next.empty()) level(next, depth + 1);
      };
  level(m.dependencies, 1);
  if (unknown) return std::nullopt;
  return chosen;
}

std::set<MethodRef> closure_oracle(const CallGraph& g, const std::set<MethodRef>& seeds) {
  std::set<MethodRef> out = seeds;
  for (const auto& [v, _] : g.vertices()) {
    for (const auto& w : dfs_reachable(g, {v})) {
      if (seeds.contains(w)) {
        out.insert(v);
        break;
      }
    }
  }
  return out;
}

}  // namespace sca::testing
