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

#include "sca/method_ref.hpp"

#include <algorithm>

#include "sca/error.hpp"

namespace sca {

namespace {

bool is_control(char c) {
  return static_cast<unsigned char>(c) < 0x20 || c == 0x7f;
}

bool is_name_char(char c) {
  return !is_control(c) && c != ' ' && c != '\t' && c != '(' && c != ')' &&
         c != '.';
}

[[noreturn]] void fail(std::string_view text, std::size_t begin,
                       std::size_t end, std::string_view what) {
  std::string msg = "malformed method ref '";
  msg.append(text);
  msg += "': ";
  msg.append(what);
  msg += " at [" + std::to_string(begin) + "," + std::to_string(end) + ")";
  if (begin < end && end <= text.size()) {
    msg += " '";
    msg.append(text.substr(begin, end - begin));
    msg += "'";
  }
  throw ParseError(msg);
}

}  // namespace

bool is_valid_class_name(std::string_view name) {
  if (name.empty() || name.front() == '.' || name.back() == '.') return false;
  char prev = '\0';
  for (char c : name) {
    if (c == '.') {
      if (prev == '.') return false;
    } else if (!is_name_char(c)) {
      return false;
    }
    prev = c;
  }
  return true;
}

MethodRef MethodRef::parse(std::string_view text) {
  if (text.empty()) fail(text, 0, 0, "empty text");

  const std::size_t open = text.find('(');
  if (open == std::string_view::npos) {
    fail(text, 0, text.size(), "missing descriptor '(...)'");
  }
  const std::string_view head = text.substr(0, open);
  const std::size_t dot = head.rfind('.');
  if (dot == std::string_view::npos) {
    fail(text, 0, open, "missing class qualifier");
  }
  if (dot == 0) fail(text, 0, 0, "empty class name");
  if (dot + 1 == open) fail(text, dot + 1, open, "empty method name");

  MethodRef ref;
  ref.text_ = std::string(text);
  ref.class_len_ = dot;
  ref.name_len_ = open - dot - 1;

  if (!is_valid_class_name(ref.class_name())) {
    fail(text, 0, dot, "invalid class name");
  }
  const std::string_view name = ref.method_name();
  if (!std::all_of(name.begin(), name.end(), is_name_char)) {
    fail(text, dot + 1, open, "invalid method name");
  }

  const std::string_view desc = ref.descriptor();
  const std::size_t close = desc.find(')');
  if (close == std::string_view::npos) {
    fail(text, open, text.size(), "unterminated descriptor");
  }
  for (std::size_t i = 1; i < desc.size(); ++i) {
    const char c = desc[i];
    if (c == '(' || (c == ')' && i != close) || is_control(c)) {
      fail(text, open + i, open + i + 1, "unexpected character in descriptor");
    }
  }
  return ref;
}

MethodRef::MethodRef(std::string_view class_name, std::string_view method_name,
                     std::string_view descriptor) {
  std::string text;
  text.reserve(class_name.size() + method_name.size() + descriptor.size() + 1);
  text.append(class_name);
  text += '.';
  text.append(method_name);
  text.append(descriptor);
  MethodRef parsed = parse(text);
  // A class/method split that disagrees with the parts means one of the parts
  // smuggled a '.' or '('.
  if (parsed.class_name() != class_name ||
      parsed.method_name() != method_name) {
    fail(parsed.text_, 0, parsed.text_.size(),
         "parts do not form a canonical ref");
  }
  *this = std::move(parsed);
}

std::string_view MethodRef::params() const {
  const std::string_view desc = descriptor();
  const std::size_t close = desc.find(')');
  return desc.substr(1, close - 1);
}

std::string_view MethodRef::return_type() const {
  const std::string_view desc = descriptor();
  return desc.substr(desc.find(')') + 1);
}

}  // namespace sca
