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

#ifndef STPA_SRC_LEXER_HPP_
#define STPA_SRC_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "stpa/source.hpp"

namespace stpa::detail {

enum class TokenKind { kKeyword, kIdent, kString, kArrow, kComma, kEof };

struct Token {
  TokenKind kind = TokenKind::kEof;
  // Keyword/identifier spelling, or the unescaped value of a string.
  std::string text;
  SourceSpan span;
};

bool is_keyword(std::string_view word);

// "identifier 'foo'", "string", "'->'", "end of input", ...
std::string describe(const Token& token);

// Tokenizes the whole source. Lexical errors are appended to `diagnostics`
// and the offending characters skipped, so parsing can still report
// syntax errors further on. The result always ends with a kEof token.
std::vector<Token> tokenize(std::string_view source, const std::string& file,
                            std::vector<ParseDiagnostic>& diagnostics);

}  // namespace stpa::detail

#endif  // STPA_SRC_LEXER_HPP_
