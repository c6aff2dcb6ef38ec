// Copyright 2026 The optdyn Authors.
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

#ifndef OPTDYN_CLI_COMMANDS_H_
#define OPTDYN_CLI_COMMANDS_H_

#include <ostream>

namespace optdyn::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNumeric = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the optdyn tool. Subcommands: run, figure1, sweep,
// predict, verify.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace optdyn::cli

#endif  // OPTDYN_CLI_COMMANDS_H_
