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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <utility>

#include <CLI11.hpp>

#include "stpa/asil.hpp"
#include "stpa/corpus.hpp"
#include "stpa/dsl.hpp"
#include "stpa/reports.hpp"
#include "stpa/step1.hpp"
#include "stpa/step2.hpp"
#include "stpa/trace.hpp"
#include "stpa/validate.hpp"

namespace stpa::cli {

namespace {

struct Style {
  bool color = false;
  std::string paint(std::string_view text, const char* code) const {
    if (!color) return std::string(text);
    return std::string("\x1b[") + code + "m" + std::string(text) + "\x1b[0m";
  }
  std::string error(std::string_view t) const { return paint(t, "1;31"); }
  std::string warning(std::string_view t) const { return paint(t, "1;33"); }
};

struct Options {
  bool no_color = false;
  bool strict = false;
  std::string file;
  bool csv = false;
  std::vector<std::string> rate;
  std::string id;
  std::string uca;
  std::string format;
  std::string out_dir;
};

// Loads and parses `path`; on failure reports to `err` and returns nullopt.
std::optional<SafetyModel> load(const std::string& path, std::ostream& err, const Style& style) {
  ParseResult result;
  try {
    result = parse_file(path);
  } catch (const std::exception& e) {
    err << "stpa: " << style.error("error") << ": " << e.what() << '\n';
    return std::nullopt;
  }
  if (!result.ok()) {
    for (const auto& d : result.diagnostics) {
      err << d.span.file << ':' << d.span.line << ':' << d.span.column << ": "
          << style.error("error") << ": " << d.message << '\n';
    }
    err << result.diagnostics.size() << " parse error"
        << (result.diagnostics.size() == 1 ? "" : "s") << '\n';
    return std::nullopt;
  }
  return std::move(result.model);
}

void print_findings(const std::vector<Finding>& findings, const std::string& file,
                    std::ostream& err, const Style& style) {
  for (const auto& f : findings) {
    err << file;
    if (f.span) err << ':' << f.span->line << ':' << f.span->column;
    bool is_error = f.severity == FindingSeverity::kError;
    std::string label = std::string(to_string(f.severity)) + "[" + f.code + "]";
    err << ": " << (is_error ? style.error(label) : style.warning(label)) << ": " << f.message
        << '\n';
  }
}

int status_for(const std::vector<Finding>& findings, bool strict) {
  if (count_errors(findings) > 0) return kValidationErrors;
  if (strict && !findings.empty()) return kValidationErrors;
  return kSuccess;
}

std::optional<Rating> parse_rate(const std::vector<std::string>& parts) {
  if (parts.size() != 3) return std::nullopt;
  constexpr char kLetters[] = {'S', 'E', 'C'};
  int values[3] = {};
  for (int i = 0; i < 3; ++i) {
    const std::string& p = parts[static_cast<std::size_t>(i)];
    if (p.size() != 2 || p[0] != kLetters[i] || p[1] < '0' || p[1] > '9') return std::nullopt;
    values[i] = p[1] - '0';
  }
  return Rating{values[0], values[1], values[2]};
}

int cmd_check(const Options& o, std::ostream&, std::ostream& err, const Style& style) {
  auto model = load(o.file, err, style);
  if (!model) return kParseFailure;
  auto findings = validate(*model);
  print_findings(findings, o.file, err, style);
  err << count_errors(findings) << " errors, " << count_warnings(findings) << " warnings\n";
  return status_for(findings, o.strict);
}

int cmd_candidates(const Options& o, std::ostream& out, std::ostream& err, const Style& style) {
  auto model = load(o.file, err, style);
  if (!model) return kParseFailure;
  if (o.csv) {
    out << emit_csv_matrix(make_bundle(std::move(*model)));
    return kSuccess;
  }
  for (const auto& c : enumerate_candidates(*model)) {
    out << c.action << '\t' << to_string(c.category) << '\t' << to_string(c.status);
    for (const auto& id : c.ucas) out << '\t' << id;
    out << '\n';
  }
  return kSuccess;
}

int cmd_asil(const Options& o, std::ostream& out, std::ostream& err, const Style& style) {
  if (o.rate.empty() == o.file.empty()) {
    err << "stpa asil: give either --rate S<n> E<n> C<n> or a model file\n";
    return kUsageError;
  }
  if (!o.rate.empty()) {
    auto rating = parse_rate(o.rate);
    if (!rating || !rating->in_range()) {
      err << "stpa asil: --rate expects S0-S3 E0-E4 C0-C3, e.g. --rate S3 E4 C3\n";
      return kUsageError;
    }
    out << to_string(compute_asil(*rating)) << '\n';
    return kSuccess;
  }
  auto model = load(o.file, err, style);
  if (!model) return kParseFailure;
  for (const auto& u : model->ucas) {
    out << u.id << '\t';
    if (!u.rating) {
      out << "unrated\n";
    } else if (!u.rating->in_range()) {
      out << format_rating(*u.rating) << "\tinvalid\n";
    } else {
      out << format_rating(*u.rating) << '\t' << to_string(compute_asil(*u.rating)) << '\n';
    }
  }
  return kSuccess;
}

int cmd_trace(const Options& o, std::ostream& out, std::ostream& err, const Style& style) {
  auto model = load(o.file, err, style);
  if (!model) return kParseFailure;
  try {
    out << render_trace(trace(*model, o.id));
  } catch (const NotFoundError& e) {
    err << "stpa trace: " << e.what() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

int cmd_step2(const Options& o, std::ostream& out, std::ostream& err, const Style& style) {
  auto model = load(o.file, err, style);
  if (!model) return kParseFailure;
  std::vector<CausalPrompt> prompts;
  try {
    prompts = step2_prompts(*model, o.uca);
  } catch (const NotFoundError& e) {
    err << "stpa step2: " << e.what() << '\n';
    return kUsageError;
  }
  for (const auto& p : prompts) {
    out << to_string(p.element) << ": " << p.question << "\n  answered by: ";
    if (p.answered_by.empty()) {
      out << "(none)";
    } else {
      for (std::size_t i = 0; i < p.answered_by.size(); ++i) {
        out << (i == 0 ? "" : ", ") << p.answered_by[i];
      }
    }
    out << '\n';
  }
  return kSuccess;
}

int cmd_report(const Options& o, std::ostream& out, std::ostream& err, const Style& style) {
  auto model = load(o.file, err, style);
  if (!model) return kParseFailure;
  ReportBundle bundle = make_bundle(std::move(*model));
  std::string text;
  std::string name;
  if (o.format == "md") {
    text = emit_markdown(bundle);
    name = "report.md";
  } else if (o.format == "json") {
    text = emit_json(bundle);
    name = "report.json";
  } else {
    text = emit_csv_matrix(bundle);
    name = "matrix.csv";
  }
  if (o.out_dir.empty()) {
    out << text;
  } else {
    std::error_code ec;
    std::filesystem::create_directories(o.out_dir, ec);
    std::filesystem::path path = std::filesystem::path(o.out_dir) / name;
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text) || !file.flush()) {
      err << "stpa report: cannot write " << path.string() << '\n';
      return kParseFailure;
    }
    err << "wrote " << path.string() << '\n';
  }
  err << count_errors(bundle.findings) << " errors, " << count_warnings(bundle.findings)
      << " warnings\n";
  return status_for(bundle.findings, o.strict);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Terminal& term) {
  CLI::App app{"STPA safety-model toolkit", "stpa"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--no-color", o.no_color, "Disable coloured diagnostics");
  app.add_flag("--strict", o.strict, "Treat warnings as failures");

  auto* check = app.add_subcommand("check", "Parse and validate a model");
  check->add_option("file", o.file, "Model file (.stpa)")->required();

  auto* candidates = app.add_subcommand("candidates", "List Step 1 UCA candidates");
  candidates->add_option("file", o.file, "Model file (.stpa)")->required();
  candidates->add_flag("--csv", o.csv, "Emit the CSV matrix");

  auto* asil = app.add_subcommand("asil", "Compute ASILs");
  asil->add_option("--rate", o.rate, "Rating as S<n> E<n> C<n>")->expected(3);
  asil->add_option("file", o.file, "Model file (.stpa)");

  auto* tr = app.add_subcommand("trace", "Show traceability around an entity");
  tr->add_option("file", o.file, "Model file (.stpa)")->required();
  tr->add_option("--id", o.id, "Entity id")->required();

  auto* step2 = app.add_subcommand("step2", "Causal analysis prompts for a UCA");
  step2->add_option("file", o.file, "Model file (.stpa)")->required();
  step2->add_option("--uca", o.uca, "UCA id")->required();

  auto* report = app.add_subcommand("report", "Emit a report");
  report->add_option("file", o.file, "Model file (.stpa)")->required();
  report->add_option("--format", o.format, "md, json or csv")
      ->required()
      ->check(CLI::IsMember({"md", "json", "csv"}));
  report->add_option("--out", o.out_dir, "Write into this directory instead of stdout");

  // CLI11 wants argv order reversed when given a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    const std::vector<const CLI::App*> subs =
        std::as_const(app).get_subcommands([](const CLI::App*) { return true; });
    bool unknown_command =
        !args.empty() && !args.front().empty() && args.front().front() != '-' &&
        std::none_of(subs.begin(), subs.end(),
                     [&](const CLI::App* s) { return s->check_name(args.front()); });
    if (unknown_command) {
      err << "stpa: unknown subcommand '" << args.front() << "'\nRun 'stpa --help' for usage.\n";
      return kUsageError;
    }
    err << "stpa: " << e.what() << "\nRun 'stpa --help' for usage.\n";
    return kUsageError;
  }

  Style style;
  bool env_off = term.no_color_env != nullptr && std::string_view(term.no_color_env) == "1";
  style.color = term.err_is_tty && !o.no_color && !env_off;

  if (check->parsed()) return cmd_check(o, out, err, style);
  if (candidates->parsed()) return cmd_candidates(o, out, err, style);
  if (asil->parsed()) return cmd_asil(o, out, err, style);
  if (tr->parsed()) return cmd_trace(o, out, err, style);
  if (step2->parsed()) return cmd_step2(o, out, err, style);
  if (report->parsed()) return cmd_report(o, out, err, style);
  return kUsageError;
}

}  // namespace stpa::cli
