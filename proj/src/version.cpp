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

#include "sca/version.hpp"

#include <charconv>
#include <vector>

#include "sca/error.hpp"

namespace sca {

namespace {

[[noreturn]] void fail(std::string_view kind, std::string_view text,
                       std::string_view what) {
  std::string msg = "malformed ";
  msg.append(kind);
  msg += " '";
  msg.append(text);
  msg += "': ";
  msg.append(what);
  throw ParseError(msg);
}

bool parse_component(std::string_view digits, std::uint64_t& out) {
  if (digits.empty()) return false;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
  }
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), out);
  return ec == std::errc() && ptr == digits.data() + digits.size();
}

bool is_id_part(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == ':' || c == ' ' || c == '\t' || static_cast<unsigned char>(c) < 0x20)
      return false;
  }
  return true;
}

/// Parses 1 to 3 numeric components plus optional qualifier. `components`
/// reports how many numeric components were present.
Version parse_partial(std::string_view text, std::string_view kind,
                      std::string_view whole, int& components) {
  std::string_view numeric = text;
  std::string qualifier;
  if (auto dash = text.find('-'); dash != std::string_view::npos) {
    numeric = text.substr(0, dash);
    qualifier = std::string(text.substr(dash + 1));
    if (qualifier.empty()) fail(kind, whole, "empty qualifier");
    for (char c : qualifier) {
      if (c == ' ' || static_cast<unsigned char>(c) < 0x20) {
        fail(kind, whole, "whitespace in qualifier");
      }
    }
  }
  std::uint64_t parts[3] = {0, 0, 0};
  components = 0;
  std::size_t start = 0;
  while (true) {
    if (components == 3) fail(kind, whole, "more than three components");
    const std::size_t dot = numeric.find('.', start);
    const std::string_view piece = numeric.substr(
        start, dot == std::string_view::npos ? std::string_view::npos
                                              : dot - start);
    if (!parse_component(piece, parts[components])) {
      fail(kind, whole, "component is not a non-negative integer");
    }
    ++components;
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return Version{parts[0], parts[1], parts[2], std::move(qualifier)};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Version Version::parse(std::string_view text) {
  int components = 0;
  Version v = parse_partial(text, "version", text, components);
  if (components != 3) fail("version", text, "expected major.minor.patch");
  return v;
}

std::string Version::str() const {
  std::string s = std::to_string(major) + "." + std::to_string(minor) + "." +
                  std::to_string(patch);
  if (!qualifier.empty()) s += "-" + qualifier;
  return s;
}

PackageKey PackageKey::parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    fail("package", text, "expected group:artifact");
  }
  PackageKey key{std::string(text.substr(0, colon)),
                 std::string(text.substr(colon + 1))};
  if (!is_id_part(key.group) || !is_id_part(key.artifact)) {
    fail("package", text, "empty or invalid group/artifact");
  }
  return key;
}

Coordinate Coordinate::parse(std::string_view text) {
  const std::size_t last = text.rfind(':');
  if (last == std::string_view::npos) {
    fail("coordinate", text, "expected group:artifact:version");
  }
  const std::string_view head = text.substr(0, last);
  if (head.find(':') == std::string_view::npos) {
    fail("coordinate", text, "expected group:artifact:version");
  }
  PackageKey key = PackageKey::parse(head);
  return Coordinate{std::move(key.group), std::move(key.artifact),
                    Version::parse(text.substr(last + 1))};
}

Constraint Constraint::parse(std::string_view text) {
  Constraint c;
  c.text_ = std::string(text);
  const std::string_view body = trim(text);
  if (body.empty()) fail("constraint", text, "empty constraint");
  if (body == "*") return c;

  auto tighten_lower = [&c](Bound b) {
    if (!c.lower_ || b.version > c.lower_->version ||
        (b.version == c.lower_->version && !b.inclusive)) {
      c.lower_ = std::move(b);
    }
  };
  auto tighten_upper = [&c](Bound b) {
    if (!c.upper_ || b.version < c.upper_->version ||
        (b.version == c.upper_->version && !b.inclusive)) {
      c.upper_ = std::move(b);
    }
  };

  std::vector<std::string_view> terms;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t sep = body.find_first_of(" ,", start);
    const std::string_view term =
        body.substr(start, sep == std::string_view::npos ? std::string_view::npos
                                                          : sep - start);
    if (!term.empty()) terms.push_back(term);
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }

  for (std::string_view term : terms) {
    int components = 0;
    if (term.front() == '^' || term.front() == '~') {
      if (terms.size() != 1) {
        fail("constraint", text, "caret/tilde cannot be combined");
      }
      Version v = parse_partial(term.substr(1), "constraint", text, components);
      Version upper;
      if (term.front() == '^' || components == 1) {
        upper = Version{v.major + 1, 0, 0, {}};
      } else {
        upper = Version{v.major, v.minor + 1, 0, {}};
      }
      tighten_lower({std::move(v), true});
      tighten_upper({std::move(upper), false});
    } else if (term.starts_with(">=")) {
      tighten_lower({parse_partial(term.substr(2), "constraint", text, components), true});
    } else if (term.starts_with("<=")) {
      tighten_upper({parse_partial(term.substr(2), "constraint", text, components), true});
    } else if (term.front() == '>') {
      tighten_lower({parse_partial(term.substr(1), "constraint", text, components), false});
    } else if (term.front() == '<') {
      tighten_upper({parse_partial(term.substr(1), "constraint", text, components), false});
    } else {
      const std::string_view operand = term.front() == '=' ? term.substr(1) : term;
      Version v = parse_partial(operand, "constraint", text, components);
      tighten_lower({v, true});
      tighten_upper({std::move(v), true});
    }
  }
  return c;
}

bool Constraint::satisfied_by(const Version& v) const {
  if (lower_) {
    if (lower_->inclusive ? v < lower_->version : v <= lower_->version) return false;
  }
  if (upper_) {
    if (upper_->inclusive ? v > upper_->version : v >= upper_->version) return false;
  }
  return true;
}

}  // namespace sca
