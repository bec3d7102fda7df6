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
#include <vector>

#include "sca/method_ref.hpp"
#include "sca/version.hpp"

namespace sca {

/// Who owns a method: the application, a library, or a test/IoC framework.
///
/// Third-party origins carry the library coordinate when it is known.
/// Library targets referenced from an application document with no
/// matching OriginMap rule are third-party with an unknown coordinate.
class Origin {
 public:
  enum class Kind { kFirstParty, kThirdParty, kFramework };

  static Origin first_party() { return Origin(Kind::kFirstParty, {}, {}); }
  static Origin third_party(std::optional<Coordinate> library = std::nullopt) {
    return Origin(Kind::kThirdParty, std::move(library), {});
  }
  static Origin framework(std::string prefix) {
    return Origin(Kind::kFramework, {}, std::move(prefix));
  }

  /// Inverse of `str()`: `first-party`, `third-party`,
  /// `third-party:g:a:v`, `framework:<prefix>`.
  static Origin parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_first_party() const { return kind_ == Kind::kFirstParty; }
  bool is_third_party() const { return kind_ == Kind::kThirdParty; }
  bool is_framework() const { return kind_ == Kind::kFramework; }
  const std::optional<Coordinate>& library() const { return library_; }
  const std::string& prefix() const { return prefix_; }

  std::string str() const;

  friend bool operator==(const Origin&, const Origin&) = default;

  /// Total order used when two graphs disagree about a vertex: framework
  /// outranks third-party outranks first-party, known coordinates outrank
  /// unknown ones, and remaining ties fall back to text order.
  friend bool outranks(const Origin& a, const Origin& b);

 private:
  Origin(Kind kind, std::optional<Coordinate> library, std::string prefix)
      : kind_(kind), library_(std::move(library)), prefix_(std::move(prefix)) {}

  Kind kind_;
  std::optional<Coordinate> library_;
  std::string prefix_;
};

/// Ordered namespace-prefix rules. The first rule whose prefix matches the
/// method's class wins; no match means first-party.
///
/// Prefixes match whole name segments: `org.junit.` and `org.junit` both
/// match `org.junit.Runner` and `org.junit.runner.Core`, and `org.junit`
/// also matches the class `org.junit` itself, but neither matches
/// `org.junitx.Runner`.
class OriginMap {
 public:
  struct Rule {
    std::string prefix;
    Origin origin;
  };

  OriginMap() = default;
  explicit OriginMap(std::vector<Rule> rules) : rules_(std::move(rules)) {}

  /// JUnit-like and TestNG-like namespaces mapped to framework origin.
  static OriginMap with_default_frameworks();

  static const std::vector<std::string>& default_framework_prefixes();

  void add_rule(std::string prefix, Origin origin) {
    rules_.push_back({std::move(prefix), std::move(origin)});
  }
  void add_framework(std::string prefix) {
    Origin o = Origin::framework(prefix);
    rules_.push_back({std::move(prefix), std::move(o)});
  }

  Origin classify(const MethodRef& ref) const;
  Origin classify_class(std::string_view class_name) const;

  const std::vector<Rule>& rules() const { return rules_; }

 private:
  std::vector<Rule> rules_;
};

inline Origin classify_origin(const MethodRef& ref, const OriginMap& map) {
  return map.classify(ref);
}

}  // namespace sca
