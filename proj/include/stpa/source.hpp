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

#ifndef STPA_SOURCE_HPP_
#define STPA_SOURCE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace stpa {

// Location of a token in a `.stpa` file. Line and column are 1-based,
// columns count code points rather than bytes.
struct SourceSpan {
  std::string file;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;

  bool operator==(const SourceSpan&) const = default;
};

struct ParseDiagnostic {
  SourceSpan span;
  std::string message;
  std::vector<std::string> expected;
};

// "file:line:col: error: message" in the usual compiler layout.
std::string format_diagnostic(const ParseDiagnostic& diag);

}  // namespace stpa

#endif  // STPA_SOURCE_HPP_
