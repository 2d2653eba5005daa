// Copyright 2026 The simcore Authors
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

#ifndef SIMCORE_TOOLS_CLI_COMMANDS_HPP_
#define SIMCORE_TOOLS_CLI_COMMANDS_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace simcore::cli {

// Process exit status of the simcore tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDiscrepancy = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

// Parses `args` (without the program name) and runs one subcommand. Data
// goes to `out`, diagnostics and progress to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace simcore::cli

#endif  // SIMCORE_TOOLS_CLI_COMMANDS_HPP_
