// Copyright 2026 The Ambig Authors.
//
// Licensed under the Apache License, Version 2.0 (the 'License');
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an 'AS IS' BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AMBIG_TOOLS_CLI_H_
#define AMBIG_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "ambig/error.h"

namespace ambig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitEpsilonCycle = 3;
inline constexpr int kExitProbabilistic = 4;
inline constexpr int kExitInternal = 5;

int ExitCodeFor(ErrorCode code);

// Runs one command. args excludes the program name.
int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace ambig::cli

#endif  // AMBIG_TOOLS_CLI_H_
