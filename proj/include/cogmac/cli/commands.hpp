// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The cogmac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Command-line front end. `run` is the whole program minus process setup,
// so tests can drive it in-process.
//
//   cogmac solve    --scenario FILE [--out FILE] [--lambda-step X] [--tol X] [--timing]
//   cogmac region   --scenario FILE [--grid-step X] [--out FILE]
//   cogmac sweep    --scenario FILE [--lambda-max X] [--samples N] [--out FILE]
//   cogmac validate (--scenario FILE | --seed N [--count N]) [--grid-step X]
//                   [--tol X] [--gap-tol X] [--out FILE]
//
// Exit codes: 0 success, 1 bad input, 2 solver did not converge (solve) or
// verdict failed (validate).

#ifndef COGMAC_CLI_COMMANDS_HPP
#define COGMAC_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cogmac::cli {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotConverged = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cogmac::cli

#endif  // COGMAC_CLI_COMMANDS_HPP
