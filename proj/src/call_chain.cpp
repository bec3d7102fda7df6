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

#include "sca/call_chain.hpp"

#include "sca/error.hpp"

namespace sca {

CallChain::CallChain(std::vector<ChainEdge> edges, Coordinate library)
    : edges_(std::move(edges)), library_(std::move(library)) {
  if (edges_.empty()) throw Error("call chain has no edges");
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].callee != edges_[i].caller) {
      throw Error("call chain gap between edge " + std::to_string(i - 1) +
                  " (callee " + edges_[i - 1].callee.str() + ") and edge " +
                  std::to_string(i) + " (caller " + edges_[i].caller.str() +
                  ")");
    }
  }
}

CallChain CallChain::from_path(const std::vector<MethodRef>& path,
                               Coordinate library) {
  std::vector<ChainEdge> edges;
  for (std::size_t i = 1; i < path.size(); ++i) {
    edges.push_back({path[i - 1], path[i]});
  }
  return CallChain(std::move(edges), std::move(library));
}

std::vector<MethodRef> CallChain::vertices() const {
  std::vector<MethodRef> out{entry()};
  for (const auto& e : edges_) out.push_back(e.callee);
  return out;
}

}  // namespace sca
