// Copyright 2026 The stpa-toolkit Authors
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

#ifndef STPA_TOOLS_CLI_HPP_
#define STPA_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace stpa::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kValidationErrors = 1,
  kParseFailure = 2,
  kUsageError = 3,
};

struct Terminal {
  // Whether the error stream is an interactive terminal (colour candidate).
  bool err_is_tty = false;
  // Value of STPA_NO_COLOR, if set.
  const char* no_color_env = nullptr;
};

// Runs one command line. args excludes the program name. Payloads go to
// `out`, diagnostics and summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Terminal& term = {});

}  // namespace stpa::cli

#endif  // STPA_TOOLS_CLI_HPP_
