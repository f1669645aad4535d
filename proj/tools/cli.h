// Copyright 2026 The gsf Authors
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

#ifndef GSF_TOOLS_CLI_H
#define GSF_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace gsf::cli {

enum ExitCode : int {
    OK = 0,
    VERIFICATION_FAILED = 1,
    USAGE = 2,
    RESOURCE = 3,
    INTEGRITY = 4,
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace gsf::cli

#endif
