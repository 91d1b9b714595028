// Copyright 2026 The asmdf-pitch Authors. All Rights Reserved.
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

// Command-line front end: synth, track, compare, eval, curve, bench.

#ifndef ASMDF_TOOLS_CLI_H_
#define ASMDF_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace asmdf::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,     // bad flags, domain errors
  kExitIo = 3,        // missing file, unsupported or malformed input
  kExitAlignment = 4  // evaluation cannot pair the contours
};

// args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace asmdf::cli

#endif  // ASMDF_TOOLS_CLI_H_
