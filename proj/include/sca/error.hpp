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

#include <stdexcept>
#include <string>

namespace sca {

/// Base of every error raised by the engine. The CLI maps these to exit
/// status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed canonical text (method refs, versions, constraints,
/// coordinates).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An interchange document failed schema or invariant validation. The
/// message starts with the document path of the offending node, e.g.
/// `$.classes[2].methods[0].name`, or `line 7` for line-oriented inputs.
class FormatError : public Error {
 public:
  FormatError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Analysis cannot proceed (inheritance cycle, no entry points, ...).
class AnalysisError : public Error {
 public:
  using Error::Error;
};

/// Dependency resolution failed (unknown package, unsatisfiable constraint,
/// stale lockfile).
class ResolutionError : public Error {
 public:
  using Error::Error;
};

}  // namespace sca
