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

#include "sca/program.hpp"

#include <set>
#include <utility>

#include "sca/documents.hpp"
#include "sca/error.hpp"

namespace sca {

std::string_view to_string(Visibility v) {
  switch (v) {
    case Visibility::kPublic:
      return "public";
    case Visibility::kProtected:
      return "protected";
    case Visibility::kPackage:
      return "package";
    case Visibility::kPrivate:
      return "private";
  }
  return "";
}

Visibility visibility_from_string(std::string_view text) {
  if (text == "public") return Visibility::kPublic;
  if (text == "protected") return Visibility::kProtected;
  if (text == "package") return Visibility::kPackage;
  if (text == "private") return Visibility::kPrivate;
  throw ParseError("unknown visibility '" + std::string(text) + "'");
}

const MethodModel* ClassModel::find_method(std::string_view name,
                                           std::string_view descriptor) const {
  for (const auto& m : methods) {
    if (m.ref.method_name() == name && m.ref.descriptor() == descriptor) {
      return &m;
    }
  }
  return nullptr;
}

const ClassModel* ProgramDocument::find_class(std::string_view name) const {
  for (const auto& c : classes) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const MethodModel* ProgramDocument::find_method(const MethodRef& ref) const {
  const ClassModel* cls = find_class(ref.class_name());
  return cls ? cls->find_method(ref.method_name(), ref.descriptor()) : nullptr;
}

void ProgramDocument::validate() const {
  std::set<std::string_view> class_names;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const ClassModel& cls = classes[ci];
    const std::string cpath = "$.classes[" + std::to_string(ci) + "]";
    if (!is_valid_class_name(cls.name)) {
      throw FormatError(cpath + ".name", "invalid class name '" + cls.name + "'");
    }
    if (!class_names.insert(cls.name).second) {
      throw FormatError(cpath + ".name", "duplicate class '" + cls.name + "'");
    }
    if (cls.superclass && !is_valid_class_name(*cls.superclass)) {
      throw FormatError(cpath + ".superclass", "invalid class name");
    }
    for (std::size_t ii = 0; ii < cls.interfaces.size(); ++ii) {
      if (!is_valid_class_name(cls.interfaces[ii])) {
        throw FormatError(cpath + ".interfaces[" + std::to_string(ii) + "]",
                          "invalid class name");
      }
    }

    std::set<std::pair<std::string_view, std::string_view>> sigs;
    for (std::size_t mi = 0; mi < cls.methods.size(); ++mi) {
      const MethodModel& m = cls.methods[mi];
      const std::string mpath = cpath + ".methods[" + std::to_string(mi) + "]";
      if (m.ref.class_name() != cls.name) {
        throw FormatError(mpath, "method " + m.ref.str() +
                                     " is not owned by class " + cls.name);
      }
      if (!sigs.emplace(m.ref.method_name(), m.ref.descriptor()).second) {
        throw FormatError(mpath, "duplicate method " + m.ref.str());
      }
      for (std::size_t ni = 0; ni < m.instantiates.size(); ++ni) {
        if (!is_valid_class_name(m.instantiates[ni])) {
          throw FormatError(mpath + ".instantiates[" + std::to_string(ni) + "]",
                            "invalid class name");
        }
      }
      for (std::size_t si = 0; si < m.call_sites.size(); ++si) {
        const auto* v = std::get_if<VirtualCall>(&m.call_sites[si]);
        if (v == nullptr) continue;
        const std::string spath = mpath + ".calls[" + std::to_string(si) + "]";
        if (!is_valid_class_name(v->receiver)) {
          throw FormatError(spath + ".receiver",
                            "empty or invalid receiver type '" + v->receiver + "'");
        }
        // Re-parse to validate name/descriptor grammar.
        try {
          MethodRef(v->receiver, v->method_name, v->descriptor);
        } catch (const ParseError& e) {
          throw FormatError(spath, e.what());
        }
      }
    }
  }
}

bool RegistryDocument::contains(const Coordinate& c) const {
  return dependencies(c) != nullptr;
}

const std::vector<Dependency>* RegistryDocument::dependencies(
    const Coordinate& c) const {
  auto pkg = packages.find(c.package());
  if (pkg == packages.end()) return nullptr;
  auto ver = pkg->second.find(c.version);
  return ver == pkg->second.end() ? nullptr : &ver->second;
}

}  // namespace sca
