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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sca/method_ref.hpp"
#include "sca/version.hpp"

namespace sca {

// Language-neutral program IR: one document per application or per library
// version. Types referenced but not declared (superclasses, interfaces,
// receivers, instantiations) are external and opaque.

enum class Visibility { kPublic, kProtected, kPackage, kPrivate };

std::string_view to_string(Visibility v);
Visibility visibility_from_string(std::string_view text);

/// Static, special or otherwise statically bound call.
struct DirectCall {
  MethodRef target;
  friend bool operator==(const DirectCall&, const DirectCall&) = default;
};

/// `a.b()` where `a` has declared class or interface `receiver`.
struct VirtualCall {
  std::string receiver;
  std::string method_name;
  std::string descriptor;
  friend bool operator==(const VirtualCall&, const VirtualCall&) = default;
};

/// Reflective invocation. Either constant may be unknown.
struct ReflectiveCall {
  std::optional<std::string> class_const;
  std::optional<std::string> method_const;
  friend bool operator==(const ReflectiveCall&, const ReflectiveCall&) = default;
};

using CallSite = std::variant<DirectCall, VirtualCall, ReflectiveCall>;

struct MethodModel {
  MethodRef ref;
  Visibility visibility = Visibility::kPublic;
  bool is_static = false;
  std::string body_digest;
  std::vector<std::string> instantiates;
  std::vector<CallSite> call_sites;

  friend bool operator==(const MethodModel&, const MethodModel&) = default;
};

struct ClassModel {
  std::string name;
  std::optional<std::string> superclass;
  std::vector<std::string> interfaces;
  bool is_abstract = false;
  std::vector<MethodModel> methods;

  /// Declared method with this name and descriptor, if any.
  const MethodModel* find_method(std::string_view name,
                                 std::string_view descriptor) const;

  friend bool operator==(const ClassModel&, const ClassModel&) = default;
};

struct ProgramDocument {
  /// Empty for the application; the coordinate for a library version.
  std::optional<Coordinate> library;
  std::vector<ClassModel> classes;

  bool is_application() const { return !library.has_value(); }
  const ClassModel* find_class(std::string_view name) const;
  const MethodModel* find_method(const MethodRef& ref) const;

  /// Checks the document invariants: valid and unique class names, unique
  /// (name, descriptor) per class, method refs owned by their class,
  /// well-formed call sites. Throws FormatError with a document path.
  void validate() const;

  friend bool operator==(const ProgramDocument&, const ProgramDocument&) = default;
};

}  // namespace sca
