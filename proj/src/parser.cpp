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

#include <algorithm>
#include <array>
#include <functional>
#include <tuple>
#include <unordered_set>
#include <utility>

#include "lexer.hpp"
#include "stpa/dsl.hpp"

namespace stpa {

namespace {

using detail::Token;
using detail::TokenKind;

constexpr std::array<std::string_view, 10> kItemKeywords = {
    "accident", "hazard", "constraint", "component", "action",
    "feedback", "uca",    "safe",       "cause",     "scenario",
};

bool is_item_keyword(const Token& tok) {
  return tok.kind == TokenKind::kKeyword &&
         std::find(kItemKeywords.begin(), kItemKeywords.end(), tok.text) != kItemKeywords.end();
}

std::vector<std::string> quoted(std::initializer_list<std::string_view> words) {
  std::vector<std::string> out;
  for (auto w : words) out.push_back("'" + std::string(w) + "'");
  return out;
}

// Prefix followed by one or more digits, e.g. "UCA12".
bool matches_pattern(std::string_view id, std::string_view prefix) {
  if (id.size() <= prefix.size() || id.substr(0, prefix.size()) != prefix) return false;
  return std::all_of(id.begin() + static_cast<std::ptrdiff_t>(prefix.size()), id.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

struct SyntaxError {};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<ParseDiagnostic>& diags)
      : toks_(std::move(tokens)), diags_(diags) {}

  SafetyModel parse_document() {
    try {
      expect_keyword("model");
      model_.name = expect_string("model name").text;
    } catch (const SyntaxError&) {
      synchronize();
    }
    while (peek().kind != TokenKind::kEof) {
      if (!is_item_keyword(peek())) {
        std::vector<std::string> expected(kItemKeywords.begin(), kItemKeywords.end());
        for (auto& e : expected) e = "'" + e + "'";
        error_at(peek(), "expected a declaration, got " + describe(peek()), std::move(expected),
                 /*anchor_previous=*/false);
        synchronize();
        continue;
      }
      try {
        parse_item();
      } catch (const SyntaxError&) {
        synchronize();
      }
    }
    return std::move(model_);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  const Token& bump() {
    const Token& t = toks_[pos_];
    if (t.kind != TokenKind::kEof) ++pos_;
    return t;
  }

  bool at_keyword(std::string_view kw) const {
    return peek().kind == TokenKind::kKeyword && peek().text == kw;
  }

  // Skips at least one token, then up to the next declaration keyword.
  void synchronize() {
    if (peek().kind != TokenKind::kEof) bump();
    while (peek().kind != TokenKind::kEof && !is_item_keyword(peek())) bump();
  }

  void error_at(const Token& tok, std::string message, std::vector<std::string> expected,
                bool anchor_previous = true) {
    SourceSpan span = tok.span;
    // A construct left incomplete at end of input or end of line is reported
    // where it stops, not at whatever follows.
    if (anchor_previous && pos_ > 0) {
      const Token& prev = toks_[pos_ - 1];
      if (tok.kind == TokenKind::kEof || tok.span.line > prev.span.line) span = prev.span;
    }
    diags_.push_back(ParseDiagnostic{std::move(span), std::move(message), std::move(expected)});
  }

  void semantic_error(const SourceSpan& span, std::string message) {
    diags_.push_back(ParseDiagnostic{span, std::move(message), {}});
  }

  [[noreturn]] void fail(std::string what, std::vector<std::string> expected) {
    error_at(peek(), "expected " + what + ", got " + describe(peek()), std::move(expected));
    throw SyntaxError{};
  }

  const Token& expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail("'" + std::string(kw) + "'", quoted({kw}));
    return bump();
  }

  const Token& expect_ident(const std::string& what) {
    if (peek().kind != TokenKind::kIdent) fail(what, {"identifier"});
    return bump();
  }

  const Token& expect_string(const std::string& what) {
    if (peek().kind != TokenKind::kString) fail(what, {"string"});
    return bump();
  }

  void expect_arrow() {
    if (peek().kind != TokenKind::kArrow) fail("'->'", {"'->'"});
    bump();
  }

  bool eat_comma() {
    if (peek().kind != TokenKind::kComma) return false;
    bump();
    return true;
  }

  template <typename Enum>
  Enum expect_enum(const std::string& what, std::optional<Enum> (*lookup)(std::string_view),
                   std::initializer_list<std::string_view> choices) {
    if (peek().kind == TokenKind::kIdent) {
      if (auto value = lookup(peek().text)) {
        bump();
        return *value;
      }
    }
    fail(what, quoted(choices));
  }

  std::vector<Id> expect_id_list(const std::string& what) {
    std::vector<Id> ids{expect_ident(what).text};
    while (eat_comma()) ids.push_back(expect_ident(what).text);
    return ids;
  }

  const Token& declare(std::string_view prefix, std::string_view kind_name) {
    const Token& tok = expect_ident(std::string(kind_name) + " identifier");
    if (!prefix.empty() && !matches_pattern(tok.text, prefix)) {
      semantic_error(tok.span, std::string(kind_name) + " identifier '" + tok.text +
                                   "' must match " + std::string(prefix) + "<digits>");
    }
    if (!declared_.insert(tok.text).second) {
      semantic_error(tok.span, "duplicate declaration of '" + tok.text + "'");
    }
    return tok;
  }

  std::string text(const std::string& what) {
    const Token& tok = expect_string(what);
    if (tok.text.empty()) semantic_error(tok.span, what + " must not be empty");
    return tok.text;
  }

  int rating_digit(char letter, const std::string& what) {
    const Token& tok = peek();
    if (tok.kind == TokenKind::kIdent && tok.text.size() == 2 && tok.text[0] == letter &&
        tok.text[1] >= '0' && tok.text[1] <= '9') {
      bump();
      return tok.text[1] - '0';
    }
    fail(what, {std::string(1, letter) + "<digit>"});
  }

  void parse_item() {
    const Token& kw = bump();
    const std::string& k = kw.text;
    if (k == "accident") {
      Accident a;
      const Token& id = declare("A", "accident");
      a.id = id.text;
      a.span = id.span;
      a.description = text("accident description");
      model_.accidents.push_back(std::move(a));
    } else if (k == "hazard") {
      Hazard h;
      const Token& id = declare("H", "hazard");
      h.id = id.text;
      h.span = id.span;
      h.description = text("hazard description");
      expect_arrow();
      h.accidents = expect_id_list("accident identifier");
      model_.hazards.push_back(std::move(h));
    } else if (k == "constraint") {
      SafetyConstraint sc;
      const Token& id = declare("SC", "constraint");
      sc.id = id.text;
      sc.span = id.span;
      expect_keyword("from");
      sc.source = expect_ident("hazard or UCA identifier").text;
      sc.text = text("constraint text");
      if (at_keyword("asil")) {
        bump();
        sc.asil = expect_enum<Asil>("ASIL level", &parse_asil, {"QM", "A", "B", "C", "D"});
      }
      model_.constraints.push_back(std::move(sc));
    } else if (k == "component") {
      Component c;
      const Token& id = declare("", "component");
      c.id = id.text;
      c.span = id.span;
      expect_keyword("kind");
      c.kind = expect_enum<ComponentKind>(
          "component kind", &parse_component_kind,
          {"controller", "actuator", "sensor", "controlled_process"});
      c.label = text("component label");
      model_.components.push_back(std::move(c));
    } else if (k == "action" || k == "feedback") {
      bool is_action = k == "action";
      const Token& id = is_action ? declare("CA", "action") : declare("FB", "feedback");
      Id own = id.text;
      SourceSpan span = id.span;
      Id source = expect_ident("source component").text;
      expect_arrow();
      Id target = expect_ident("target component").text;
      std::string label = text(is_action ? "action label" : "feedback label");
      if (is_action) {
        model_.actions.push_back(ControlAction{own, source, target, label, span});
      } else {
        model_.feedbacks.push_back(FeedbackSignal{own, source, target, label, span});
      }
    } else if (k == "uca") {
      parse_uca();
    } else if (k == "safe") {
      SafeAssessment s;
      s.span = kw.span;
      s.action = expect_ident("control action identifier").text;
      expect_keyword("category");
      s.category = category_class();
      expect_keyword("justification");
      s.justification = text("justification");
      model_.safe_assessments.push_back(std::move(s));
    } else if (k == "cause") {
      CausalFactor cf;
      const Token& id = declare("CF", "causal factor");
      cf.id = id.text;
      cf.span = id.span;
      expect_keyword("on");
      cf.uca = expect_ident("UCA identifier").text;
      expect_keyword("element");
      cf.element = expect_enum<CausalElement>(
          "causal element", &parse_causal_element,
          {"controller_process_model", "control_algorithm", "actuator_or_control_path",
           "controlled_process", "sensor_or_measurement", "feedback_path",
           "communication_channel", "external_disturbance"});
      cf.description = text("causal factor description");
      model_.causal_factors.push_back(std::move(cf));
    } else {  // scenario
      CausalScenario scn;
      const Token& id = declare("SCN", "scenario");
      scn.id = id.text;
      scn.span = id.span;
      expect_keyword("on");
      scn.uca = expect_ident("UCA identifier").text;
      expect_keyword("requires");
      scn.factors = expect_id_list("causal factor identifier");
      scn.description = text("scenario description");
      model_.scenarios.push_back(std::move(scn));
    }
  }

  UcaClass category_class() {
    return expect_enum<UcaClass>("UCA category", &parse_uca_class,
                                 {"provided", "not_provided", "wrong_timing", "wrong_duration"});
  }

  void parse_uca() {
    UnsafeControlAction uca;
    const Token& id = declare("UCA", "UCA");
    uca.id = id.text;
    uca.span = id.span;
    expect_keyword("on");
    uca.action = expect_ident("control action identifier").text;
    expect_keyword("category");
    uca.category.cls = category_class();
    if (at_keyword("qualifier")) {
      bump();
      SourceSpan qspan = peek().span;
      auto q = expect_enum<UcaQualifier>(
          "UCA qualifier", &parse_uca_qualifier,
          {"too_early", "too_late", "out_of_sequence", "too_long", "stopped_too_soon"});
      if (!qualifier_allowed(uca.category.cls, q)) {
        semantic_error(qspan, "qualifier '" + std::string(to_string(q)) +
                                  "' does not apply to category '" +
                                  std::string(to_string(uca.category.cls)) + "'");
      }
      uca.category.qualifier = q;
    }
    expect_keyword("context");
    uca.context = text("UCA context");
    expect_keyword("hazards");
    uca.hazards = expect_id_list("hazard identifier");
    if (at_keyword("rating")) {
      bump();
      Rating r;
      r.severity = rating_digit('S', "severity");
      r.exposure = rating_digit('E', "exposure");
      r.controllability = rating_digit('C', "controllability");
      uca.rating = r;
    }
    model_.ucas.push_back(std::move(uca));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<ParseDiagnostic>& diags_;
  SafetyModel model_;
  std::unordered_set<std::string> declared_;
};

}  // namespace

ParseResult parse(std::string_view source, std::string file) {
  ParseResult result;
  auto tokens = detail::tokenize(source, file, result.diagnostics);
  SafetyModel model = Parser(std::move(tokens), result.diagnostics).parse_document();
  std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(),
                   [](const ParseDiagnostic& a, const ParseDiagnostic& b) {
                     return std::tie(a.span.line, a.span.column) <
                            std::tie(b.span.line, b.span.column);
                   });
  if (result.diagnostics.empty()) result.model = std::move(model);
  return result;
}

std::string format_diagnostic(const ParseDiagnostic& diag) {
  std::string out = diag.span.file + ":" + std::to_string(diag.span.line) + ":" +
                    std::to_string(diag.span.column) + ": error: " + diag.message;
  return out;
}

}  // namespace stpa
