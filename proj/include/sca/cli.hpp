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

#include <ostream>
#include <string>
#include <vector>

namespace sca::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitInputError = 2;

/// Runs `sca` with `args` (program name excluded). Reports go to `out`
/// unless `--out` names a file; errors and usage go to `err`.
///
/// Subcommands: resolve, graph, chains, reach, remediate. A TOML file named
/// by `--config` or the SCA_CONFIG environment variable supplies defaults
/// for any flag, in a section named after the subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sca::cli
