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

#include "sca/origin.hpp"

#include "sca/error.hpp"

namespace sca {

Origin Origin::parse(std::string_view text) {
  if (text == "first-party") return first_party();
  if (text == "third-party") return third_party();
  if (text.starts_with("third-party:")) {
    return third_party(Coordinate::parse(text.substr(12)));
  }
  if (text.starts_with("framework:") && text.size() > 10) {
    return framework(std::string(text.substr(10)));
  }
  throw ParseError("malformed origin '" + std::string(text) + "'");
}

std::string Origin::str() const {
  switch (kind_) {
    case Kind::kFirstParty:
      return "first-party";
    case Kind::kThirdParty:
      return library_ ? "third-party:" + library_->str() : "third-party";
    case Kind::kFramework:
      return "framework:" + prefix_;
  }
  return {};
}

bool outranks(const Origin& a, const Origin& b) {
  auto rank = [](const Origin& o) {
    switch (o.kind()) {
      case Origin::Kind::kFramework:
        return 3;
      case Origin::Kind::kThirdParty:
        return o.library() ? 2 : 1;
      case Origin::Kind::kFirstParty:
        return 0;
    }
    return 0;
  };
  if (rank(a) != rank(b)) return rank(a) > rank(b);
  return a.str() < b.str();
}

const std::vector<std::string>& OriginMap::default_framework_prefixes() {
  static const std::vector<std::string> prefixes = {
      "junit.", "org.junit.", "org.testng.",
  };
  return prefixes;
}

OriginMap OriginMap::with_default_frameworks() {
  OriginMap map;
  for (const auto& p : default_framework_prefixes()) map.add_framework(p);
  return map;
}

Origin OriginMap::classify_class(std::string_view class_name) const {
  std::string dotted(class_name);
  dotted += '.';
  for (const Rule& rule : rules_) {
    if (rule.prefix.empty()) continue;
    const bool matches =
        rule.prefix.back() == '.'
            ? dotted.starts_with(rule.prefix)
            : dotted.starts_with(rule.prefix) && dotted[rule.prefix.size()] == '.';
    if (matches) return rule.origin;
  }
  return Origin::first_party();
}

Origin OriginMap::classify(const MethodRef& ref) const {
  return classify_class(ref.class_name());
}

}  // namespace sca
