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

#include <vector>

#include "sca/method_ref.hpp"
#include "sca/version.hpp"

namespace sca {

struct ChainEdge {
  MethodRef caller;
  MethodRef callee;
  friend bool operator==(const ChainEdge&, const ChainEdge&) = default;
};

/// Edge sequence e_1..e_n inside one library, from a library entry point to
/// a vulnerability-specific sink. Consecutive edges share a vertex and the
/// last callee is the sink.
class CallChain {
 public:
  /// Throws Error describing the first violated invariant.
  CallChain(std::vector<ChainEdge> edges, Coordinate library);

  /// Builds a chain from its vertex sequence (at least two vertices).
  static CallChain from_path(const std::vector<MethodRef>& path,
                             Coordinate library);

  const std::vector<ChainEdge>& edges() const { return edges_; }
  const MethodRef& entry() const { return edges_.front().caller; }
  const MethodRef& sink() const { return edges_.back().callee; }
  const Coordinate& library() const { return library_; }
  std::size_t size() const { return edges_.size(); }

  /// entry, then every callee in order.
  std::vector<MethodRef> vertices() const;

  friend bool operator==(const CallChain&, const CallChain&) = default;

 private:
  std::vector<ChainEdge> edges_;
  Coordinate library_;
};

}  // namespace sca
