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

#include "lexer.hpp"

#include <algorithm>
#include <array>

namespace stpa::detail {

namespace {

constexpr std::array<std::string_view, 23> kKeywords = {
    "model",   "accident", "hazard",   "constraint", "component",    "action",
    "feedback", "uca",     "safe",     "cause",      "scenario",     "kind",
    "on",      "category", "qualifier", "context",   "hazards",      "rating",
    "justification", "element", "requires", "from",  "asil",
};

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) { return is_alpha(c) || is_digit(c) || c == '_'; }
bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

class Lexer {
 public:
  Lexer(std::string_view src, const std::string& file, std::vector<ParseDiagnostic>& diags)
      : src_(src), file_(file), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    for (;;) {
      skip_trivia();
      if (at_end()) break;
      std::size_t start_line = line_, start_col = col_, start_pos = pos_;
      char c = src_[pos_];
      Token tok;
      if (is_alpha(c)) {
        while (!at_end() && is_ident_char(src_[pos_])) advance();
        tok.text = std::string(src_.substr(start_pos, pos_ - start_pos));
        tok.kind = is_keyword(tok.text) ? TokenKind::kKeyword : TokenKind::kIdent;
      } else if (c == '"') {
        lex_string(tok.text, start_line, start_col);
        tok.kind = TokenKind::kString;
      } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        advance();
        advance();
        tok.kind = TokenKind::kArrow;
      } else if (c == ',') {
        advance();
        tok.kind = TokenKind::kComma;
      } else {
        advance();
        while (!at_end() && is_continuation(static_cast<unsigned char>(src_[pos_]))) advance();
        error(start_line, start_col, pos_ - start_pos,
              "unknown character '" + std::string(src_.substr(start_pos, pos_ - start_pos)) +
                  "'");
        continue;
      }
      tok.span = SourceSpan{file_, start_line, start_col, col_ - start_col};
      tokens.push_back(std::move(tok));
    }
    Token eof;
    eof.kind = TokenKind::kEof;
    eof.span = SourceSpan{file_, line_, col_, 0};
    tokens.push_back(std::move(eof));
    return tokens;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }

  void advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if (!is_continuation(static_cast<unsigned char>(c))) {
      ++col_;
    }
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (!at_end() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  // Consumes a string literal starting at the opening quote. Malformed
  // literals are reported but still yield a token, so the parser does not
  // report a missing string on top.
  void lex_string(std::string& out, std::size_t line, std::size_t col) {
    advance();  // opening quote
    for (;;) {
      if (at_end() || src_[pos_] == '\n' || src_[pos_] == '\r') {
        error(line, col, col_ - col, "unterminated string literal");
        return;
      }
      char c = src_[pos_];
      if (c == '"') {
        advance();
        return;
      }
      if (c == '\\') {
        std::size_t esc_col = col_;
        advance();
        if (!at_end() && (src_[pos_] == '"' || src_[pos_] == '\\')) {
          out.push_back(src_[pos_]);
          advance();
        } else {
          error(line_, esc_col, 2, "invalid escape sequence in string literal");
        }
        continue;
      }
      out.push_back(c);
      advance();
    }
  }

  void error(std::size_t line, std::size_t col, std::size_t len, std::string message) {
    diags_.push_back(ParseDiagnostic{SourceSpan{file_, line, col, len}, std::move(message), {}});
  }

  std::string_view src_;
  const std::string& file_;
  std::vector<ParseDiagnostic>& diags_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::string describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::kKeyword: return "'" + token.text + "'";
    case TokenKind::kIdent: return "identifier '" + token.text + "'";
    case TokenKind::kString: return "string";
    case TokenKind::kArrow: return "'->'";
    case TokenKind::kComma: return "','";
    case TokenKind::kEof: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view source, const std::string& file,
                            std::vector<ParseDiagnostic>& diagnostics) {
  return Lexer(source, file, diagnostics).run();
}

}  // namespace stpa::detail
