//
// Copyright 2026 The DPClustX Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DPCLUSTX_CLI_H_
#define DPCLUSTX_CLI_H_

#include <ostream>

#include "dpclustx/error.h"

namespace dpclustx {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitGuard = 4;

int ExitCodeFor(ErrorCode code);

// Runs the command line `dpclustx <subcommand> ...` and returns its exit
// status. Diagnostics go to err.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace dpclustx

#endif  // DPCLUSTX_CLI_H_
