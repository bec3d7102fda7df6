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

#include "sca/static_cg.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "sca/error.hpp"

namespace sca::static_cg {

// ---------------------------------------------------------------------------
// HierarchyIndex

HierarchyIndex HierarchyIndex::build(const ProgramDocument& program) {
  HierarchyIndex index;
  for (const auto& cls : program.classes) {
    index.classes_[cls.name].model = &cls;
  }

  auto supertypes = [](const ClassModel& cls) {
    std::vector<std::string> out;
    if (cls.superclass) out.push_back(*cls.superclass);
    out.insert(out.end(), cls.interfaces.begin(), cls.interfaces.end());
    return out;
  };

  for (const auto& cls : program.classes) {
    for (const auto& super : supertypes(cls)) {
      index.subtypes_[super].insert(cls.name);
      if (!index.is_declared(super)) index.external_.insert(super);
    }
  }

  // Cycle check over declared supertype links: 0 = new, 1 = on stack, 2 = done.
  std::map<std::string_view, int> color;
  std::vector<std::string_view> stack;
  auto visit = [&](auto&& self, std::string_view name) -> void {
    color[name] = 1;
    stack.push_back(name);
    for (const auto& super : supertypes(*index.classes_.find(name)->second.model)) {
      if (!index.is_declared(super)) continue;
      const int c = color[super];
      if (c == 1) {
        std::string cycle;
        auto it = std::find(stack.begin(), stack.end(), std::string_view(super));
        for (; it != stack.end(); ++it) cycle += std::string(*it) + " -> ";
        cycle += super;
        throw AnalysisError("inheritance cycle: " + cycle);
      }
      if (c == 0) self(self, super);
    }
    stack.pop_back();
    color[name] = 2;
  };
  for (const auto& cls : program.classes) {
    if (color[cls.name] == 0) visit(visit, cls.name);
  }

  for (auto& [name, info] : index.classes_) {
    std::string cur = name;
    while (true) {
      info.chain.push_back(cur);
      auto it = index.classes_.find(cur);
      if (it == index.classes_.end() || !it->second.model->superclass) break;
      cur = *it->second.model->superclass;
    }
  }
  return index;
}

bool HierarchyIndex::is_declared(std::string_view cls) const {
  return classes_.find(cls) != classes_.end();
}

bool HierarchyIndex::is_concrete(std::string_view cls) const {
  auto it = classes_.find(cls);
  return it != classes_.end() && !it->second.model->is_abstract;
}

const std::set<std::string>& HierarchyIndex::direct_subtypes(
    std::string_view cls) const {
  static const std::set<std::string> kNone;
  auto it = subtypes_.find(cls);
  return it == subtypes_.end() ? kNone : it->second;
}

std::set<std::string> HierarchyIndex::cone(std::string_view cls) const {
  std::set<std::string> out{std::string(cls)};
  std::vector<std::string> stack{std::string(cls)};
  while (!stack.empty()) {
    std::string cur = std::move(stack.back());
    stack.pop_back();
    for (const auto& sub : direct_subtypes(cur)) {
      if (out.insert(sub).second) stack.push_back(sub);
    }
  }
  return out;
}

const std::vector<std::string>& HierarchyIndex::superclass_chain(
    std::string_view cls) const {
  static const std::vector<std::string> kNone;
  auto it = classes_.find(cls);
  return it == classes_.end() ? kNone : it->second.chain;
}

std::optional<MethodRef> HierarchyIndex::resolve(
    std::string_view cls, std::string_view name,
    std::string_view descriptor) const {
  if (!is_declared(cls)) return std::nullopt;
  const auto& chain = superclass_chain(cls);
  for (const auto& c : chain) {
    auto it = classes_.find(c);
    if (it == classes_.end()) {
      // External superclass: assume it provides the member.
      return MethodRef(c, name, descriptor);
    }
    if (const MethodModel* m = it->second.model->find_method(name, descriptor)) {
      return m->ref;
    }
  }

  std::deque<std::string> queue;
  std::set<std::string> seen;
  for (const auto& c : chain) {
    for (const auto& i : classes_.find(c)->second.model->interfaces) {
      if (seen.insert(i).second) queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const std::string cur = std::move(queue.front());
    queue.pop_front();
    auto it = classes_.find(cur);
    if (it == classes_.end()) continue;
    const ClassModel& model = *it->second.model;
    if (const MethodModel* m = model.find_method(name, descriptor)) return m->ref;
    for (const auto& i : model.interfaces) {
      if (seen.insert(i).second) queue.push_back(i);
    }
    if (model.superclass && seen.insert(*model.superclass).second) {
      queue.push_back(*model.superclass);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Passes

std::map<std::string, std::int64_t> Diagnostics::as_map() const {
  return {
      {"init_edges", init_edges},
      {"init_unresolved", init_unresolved},
      {"cha_added", cha_added},
      {"cha_unresolved", cha_unresolved},
      {"rta_removed", rta_removed},
      {"rta_instantiated", rta_instantiated},
      {"reflection_added", reflection_added},
      {"reflection_unresolved", reflection_unresolved},
      {"pruned_vertices", pruned_vertices},
      {"pruned_edges", pruned_edges},
  };
}

Origin own_origin(const ProgramDocument& program) {
  return program.library ? Origin::third_party(program.library)
                         : Origin::first_party();
}

namespace {

Origin target_origin(const MethodRef& target, const ProgramDocument& program,
                     const HierarchyIndex& hierarchy, const OriginMap& map) {
  if (hierarchy.is_declared(target.class_name())) return own_origin(program);
  Origin o = map.classify(target);
  return o.is_first_party() ? Origin::third_party() : o;
}

MethodRef direct_target(const DirectCall& call, const ProgramDocument& program,
                        const HierarchyIndex& hierarchy) {
  const MethodRef& t = call.target;
  if (hierarchy.is_declared(t.class_name()) && program.find_method(t) == nullptr) {
    if (auto r = hierarchy.resolve(t.class_name(), t.method_name(), t.descriptor())) {
      return *r;
    }
  }
  return t;
}

/// Target of a virtual site against its declared receiver only.
std::optional<MethodRef> declared_target(const VirtualCall& call,
                                         const HierarchyIndex& hierarchy) {
  if (!hierarchy.is_declared(call.receiver)) {
    return MethodRef(call.receiver, call.method_name, call.descriptor);
  }
  return hierarchy.resolve(call.receiver, call.method_name, call.descriptor);
}

/// Dispatch targets of every concrete class in the receiver's cone, each
/// paired with the class that dispatches to it.
std::vector<std::pair<std::string, MethodRef>> cone_targets(
    const VirtualCall& call, const HierarchyIndex& hierarchy,
    std::int64_t* unresolved) {
  std::vector<std::pair<std::string, MethodRef>> out;
  if (!hierarchy.is_declared(call.receiver)) return out;
  for (const auto& cls : hierarchy.cone(call.receiver)) {
    if (!hierarchy.is_concrete(cls)) continue;
    if (auto t = hierarchy.resolve(cls, call.method_name, call.descriptor)) {
      out.emplace_back(cls, std::move(*t));
    } else if (unresolved != nullptr) {
      ++*unresolved;
    }
  }
  return out;
}

void add_target_edge(GraphBuilder& b, const MethodRef& caller,
                     const MethodRef& target, const ProgramDocument& program,
                     const HierarchyIndex& hierarchy, const OriginMap& map,
                     std::int64_t* added) {
  b.add_vertex(target, target_origin(target, program, hierarchy, map));
  if (b.add_edge(caller, target, Provenance::kStatic) && added != nullptr) {
    ++*added;
  }
}

}  // namespace

CallGraph init_edges(const ProgramDocument& program,
                     const HierarchyIndex& hierarchy, const OriginMap& map,
                     Diagnostics* diag) {
  Diagnostics local;
  Diagnostics& d = diag ? *diag : local;
  GraphBuilder b;
  const Origin own = own_origin(program);
  for (const auto& cls : program.classes) {
    for (const auto& m : cls.methods) b.add_vertex(m.ref, own);
  }
  for (const auto& cls : program.classes) {
    for (const auto& m : cls.methods) {
      for (const auto& site : m.call_sites) {
        if (const auto* direct = std::get_if<DirectCall>(&site)) {
          add_target_edge(b, m.ref, direct_target(*direct, program, hierarchy),
                          program, hierarchy, map, &d.init_edges);
        } else if (const auto* v = std::get_if<VirtualCall>(&site)) {
          if (v->receiver.empty()) {
            throw AnalysisError("call site in " + m.ref.str() +
                                " names an empty receiver type");
          }
          if (auto t = declared_target(*v, hierarchy)) {
            add_target_edge(b, m.ref, *t, program, hierarchy, map, &d.init_edges);
          } else {
            ++d.init_unresolved;
          }
        }
      }
    }
  }
  return std::move(b).build();
}

CallGraph apply_cha(const CallGraph& graph, const ProgramDocument& program,
                    const HierarchyIndex& hierarchy, const OriginMap& map,
                    Diagnostics* diag) {
  Diagnostics local;
  Diagnostics& d = diag ? *diag : local;
  GraphBuilder b(graph);
  for (const auto& cls : program.classes) {
    for (const auto& m : cls.methods) {
      if (!graph.has_vertex(m.ref)) continue;
      for (const auto& site : m.call_sites) {
        const auto* v = std::get_if<VirtualCall>(&site);
        if (v == nullptr) continue;
        for (const auto& [_, target] : cone_targets(*v, hierarchy, &d.cha_unresolved)) {
          add_target_edge(b, m.ref, target, program, hierarchy, map, &d.cha_added);
        }
      }
    }
  }
  return std::move(b).build();
}

RtaResult apply_rta(const CallGraph& graph, const ProgramDocument& program,
                    const HierarchyIndex& hierarchy, const EntryPointSet& seeds,
                    const RtaOptions& options, Diagnostics* diag) {
  Diagnostics local;
  Diagnostics& d = diag ? *diag : local;

  std::set<MethodRef> reachable;
  std::set<std::string> instantiated;
  std::vector<MethodRef> worklist;
  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  auto reach = [&](const MethodRef& m) {
    if (reachable.insert(m).second) worklist.push_back(m);
  };
  for (const auto& s : seeds.methods) reach(s);

  while (!worklist.empty()) {
    std::size_t pick = 0;
    if (rng) {
      pick = std::uniform_int_distribution<std::size_t>(0, worklist.size() - 1)(*rng);
    }
    const MethodRef m = worklist[pick];
    worklist.erase(worklist.begin() + static_cast<std::ptrdiff_t>(pick));

    const MethodModel* model = program.find_method(m);
    if (model == nullptr) continue;

    bool grew = false;
    for (const auto& cls : model->instantiates) {
      grew |= instantiated.insert(cls).second;
    }
    if (grew) {
      // A new receiver class can enable dispatch from any method already
      // processed, so revisit them all.
      for (const auto& r : reachable) {
        if (r != m && std::find(worklist.begin(), worklist.end(), r) == worklist.end()) {
          worklist.push_back(r);
        }
      }
    }
    for (const auto& site : model->call_sites) {
      if (const auto* direct = std::get_if<DirectCall>(&site)) {
        reach(direct_target(*direct, program, hierarchy));
      } else if (const auto* v = std::get_if<VirtualCall>(&site)) {
        for (const auto& [cls, target] : cone_targets(*v, hierarchy, nullptr)) {
          if (instantiated.contains(cls)) reach(target);
        }
      }
    }
  }

  // Keep the edges the fixpoint justifies.
  auto justified = [&](const MethodRef& caller, const MethodRef& callee) {
    if (!hierarchy.is_declared(callee.class_name())) return true;
    const MethodModel* model = program.find_method(caller);
    if (model == nullptr) return true;
    for (const auto& site : model->call_sites) {
      if (const auto* direct = std::get_if<DirectCall>(&site)) {
        if (direct_target(*direct, program, hierarchy) == callee) return true;
      } else if (const auto* v = std::get_if<VirtualCall>(&site)) {
        for (const auto& [cls, target] : cone_targets(*v, hierarchy, nullptr)) {
          if (target == callee && instantiated.contains(cls)) return true;
        }
      }
    }
    return false;
  };

  GraphBuilder b(graph);
  for (const auto& e : graph.edges()) {
    if (!justified(e.caller, e.callee)) {
      b.remove_edge(e.caller, e.callee);
      ++d.rta_removed;
    }
  }
  d.rta_instantiated = static_cast<std::int64_t>(instantiated.size());
  return {std::move(b).build(), std::move(instantiated)};
}

CallGraph apply_reflection(const CallGraph& graph, const ProgramDocument& program,
                           Diagnostics* diag) {
  Diagnostics local;
  Diagnostics& d = diag ? *diag : local;
  GraphBuilder b(graph);
  for (const auto& cls : program.classes) {
    for (const auto& m : cls.methods) {
      if (!graph.has_vertex(m.ref)) continue;
      for (const auto& site : m.call_sites) {
        const auto* r = std::get_if<ReflectiveCall>(&site);
        if (r == nullptr || !r->class_const || !r->method_const) continue;
        const ClassModel* target_cls = program.find_class(*r->class_const);
        bool any = false;
        if (target_cls != nullptr) {
          for (const auto& tm : target_cls->methods) {
            if (tm.ref.method_name() != *r->method_const) continue;
            any = true;
            b.add_vertex(tm.ref, own_origin(program));
            if (b.add_edge(m.ref, tm.ref, Provenance::kStatic)) ++d.reflection_added;
          }
        }
        if (!any) ++d.reflection_unresolved;
      }
    }
  }
  return std::move(b).build();
}

EntryPointSet compute_entry_points(const CallGraph& graph,
                                   const EntryPointFilter& filter) {
  EntryPointSet roots = first_party_roots(graph);
  if (filter.method_name) {
    std::erase_if(roots.methods, [&](const MethodRef& r) {
      return r.method_name() != *filter.method_name;
    });
  }
  if (roots.empty()) {
    throw AnalysisError(
        "no first-party entry points: every first-party method has a caller" +
        (filter.method_name ? " or is filtered out by name '" +
                                  *filter.method_name + "'"
                            : std::string()));
  }
  return roots;
}

StaticBuild build_static(const ProgramDocument& program, const OriginMap& map,
                         const StaticConfig& config) {
  StaticBuild out;
  Diagnostics& d = out.diagnostics;
  const HierarchyIndex hierarchy = HierarchyIndex::build(program);

  CallGraph init = init_edges(program, hierarchy, map, &d);
  CallGraph cha = apply_cha(init, program, hierarchy, map, &d);
  RtaResult rta =
      apply_rta(cha, program, hierarchy, first_party_roots(cha), config.rta, &d);
  CallGraph full = apply_reflection(rta.graph, program, &d);

  out.entry_points = compute_entry_points(full, config.entry_filter);
  out.instantiated = std::move(rta.instantiated);

  const std::set<MethodRef> keep = reachable_from(full, out.entry_points.methods);
  out.graph = induced_subgraph(full, keep);
  d.pruned_vertices =
      static_cast<std::int64_t>(full.vertex_count() - out.graph.vertex_count());
  d.pruned_edges =
      static_cast<std::int64_t>(full.edge_count() - out.graph.edge_count());
  return out;
}

}  // namespace sca::static_cg
