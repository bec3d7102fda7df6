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
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace sca {

/// Canonical identity of a method: `class.method(params)ret`.
///
/// Identity is purely textual. Two refs are equal iff their canonical text
/// is byte-identical, and ordering is byte order of the canonical text, so
/// every sorted container of refs iterates in the same order on every run.
///
/// The descriptor is everything from the opening parenthesis to the end,
/// e.g. `(I)V` or `()`. It is opaque apart from the split into `params()`
/// and `return_type()`.
class MethodRef {
 public:
  /// Parses canonical text. Throws ParseError naming the offending span.
  static MethodRef parse(std::string_view text);

  /// Builds a ref from parts; validates exactly as `parse` does.
  MethodRef(std::string_view class_name, std::string_view method_name,
            std::string_view descriptor);

  std::string_view class_name() const {
    return std::string_view(text_).substr(0, class_len_);
  }
  std::string_view method_name() const {
    return std::string_view(text_).substr(class_len_ + 1, name_len_);
  }
  std::string_view descriptor() const {
    return std::string_view(text_).substr(class_len_ + 1 + name_len_);
  }
  std::string_view params() const;
  std::string_view return_type() const;

  /// Canonical text; `parse(r.str()) == r` for every valid ref.
  const std::string& str() const { return text_; }

  friend bool operator==(const MethodRef& a, const MethodRef& b) {
    return a.text_ == b.text_;
  }
  friend std::strong_ordering operator<=>(const MethodRef& a,
                                          const MethodRef& b) {
    return a.text_.compare(b.text_) <=> 0;
  }

 private:
  MethodRef() = default;

  std::string text_;
  std::size_t class_len_ = 0;
  std::size_t name_len_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const MethodRef& ref) {
  return os << ref.str();
}

/// Checks the qualified-class-name grammar shared by refs and program
/// documents: non-empty, dot-separated, no empty segment, no whitespace or
/// parentheses.
bool is_valid_class_name(std::string_view name);

}  // namespace sca

template <>
struct std::hash<sca::MethodRef> {
  std::size_t operator()(const sca::MethodRef& ref) const noexcept {
    return std::hash<std::string>{}(ref.str());
  }
};
