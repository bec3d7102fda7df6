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

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace sca {

/// `major.minor.patch[-qualifier]`. Ordered numerically by component, then
/// by qualifier bytes (the empty qualifier sorts first).
struct Version {
  std::uint64_t major = 0;
  std::uint64_t minor = 0;
  std::uint64_t patch = 0;
  std::string qualifier;

  /// Requires all three components.
  static Version parse(std::string_view text);

  std::string str() const;

  friend bool operator==(const Version&, const Version&) = default;
  friend std::strong_ordering operator<=>(const Version& a, const Version& b) {
    if (auto c = a.major <=> b.major; c != 0) return c;
    if (auto c = a.minor <=> b.minor; c != 0) return c;
    if (auto c = a.patch <=> b.patch; c != 0) return c;
    return a.qualifier.compare(b.qualifier) <=> 0;
  }
};

/// `group:artifact`, the version-less identity of a package.
struct PackageKey {
  std::string group;
  std::string artifact;

  static PackageKey parse(std::string_view text);
  std::string str() const { return group + ":" + artifact; }

  friend bool operator==(const PackageKey&, const PackageKey&) = default;
  friend auto operator<=>(const PackageKey&, const PackageKey&) = default;
};

/// `group:artifact:version`.
struct Coordinate {
  std::string group;
  std::string artifact;
  Version version;

  static Coordinate parse(std::string_view text);
  PackageKey package() const { return {group, artifact}; }
  std::string str() const {
    return group + ":" + artifact + ":" + version.str();
  }

  friend bool operator==(const Coordinate&, const Coordinate&) = default;
  friend std::strong_ordering operator<=>(const Coordinate& a,
                                          const Coordinate& b) {
    if (auto c = a.group.compare(b.group) <=> 0; c != 0) return c;
    if (auto c = a.artifact.compare(b.artifact) <=> 0; c != 0) return c;
    return a.version <=> b.version;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Version& v) {
  return os << v.str();
}
inline std::ostream& operator<<(std::ostream& os, const Coordinate& c) {
  return os << c.str();
}

/// Version constraint over a semver subset:
///
///   *                 any version
///   1.2.3, =1.2.3     exact
///   >=1.0 <2.0        comparator list, space or comma separated, all must hold
///   ^1.2.3            >=1.2.3 <2.0.0   (same major)
///   ~1.2.3            >=1.2.3 <1.3.0   (same minor; `~1` means same major)
///
/// Operands other than exact pins may omit minor/patch (`^1.0`), which
/// default to zero. Every form normalizes to a single interval.
class Constraint {
 public:
  struct Bound {
    Version version;
    bool inclusive = true;
    friend bool operator==(const Bound&, const Bound&) = default;
  };

  static Constraint parse(std::string_view text);
  static Constraint any() { return parse("*"); }

  bool satisfied_by(const Version& v) const;

  /// Original text, kept for lossless serialization.
  const std::string& str() const { return text_; }

  const std::optional<Bound>& lower() const { return lower_; }
  const std::optional<Bound>& upper() const { return upper_; }

  friend bool operator==(const Constraint& a, const Constraint& b) {
    return a.text_ == b.text_;
  }

 private:
  std::string text_;
  std::optional<Bound> lower_;
  std::optional<Bound> upper_;
};

}  // namespace sca
