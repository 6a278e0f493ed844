// Copyright 2026 The superadmm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef SUPERADMM_TOOLS_CLI_HPP_
#define SUPERADMM_TOOLS_CLI_HPP_

#include <iosfwd>

#include "superadmm/result.hpp"

namespace superadmm::cli {

inline constexpr int kExitSolved = 0;
inline constexpr int kExitInaccurate = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitLimit = 3;
inline constexpr int kExitError = 4;

int exit_code_for(Status status);

// Runs the `superadmm` command line (argv[0] is the program name) and returns
// the process exit code. Regular output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superadmm::cli

#endif  // SUPERADMM_TOOLS_CLI_HPP_
