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

#include "stpa/corpus.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#ifndef STPA_CORPUS_DIR
#define STPA_CORPUS_DIR "corpus"
#endif

namespace stpa {

std::string read_text_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    throw std::runtime_error(path.string() + ": is a directory");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path.string() + ": " + std::strerror(errno));
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error(path.string() + ": read error");
  return buf.str();
}

ParseResult parse_file(const std::filesystem::path& path) {
  return parse(read_text_file(path), path.string());
}

std::filesystem::path default_corpus_dir() { return STPA_CORPUS_DIR; }

CorpusManifest corpus_manifest(const std::filesystem::path& dir) {
  CorpusManifest m;
  m.model_path = dir / "gcdc.stpa";
  m.golden_paths = {
      {"md", dir / "golden" / "report.md"},
      {"json", dir / "golden" / "report.json"},
      {"csv", dir / "golden" / "matrix.csv"},
  };
  return m;
}

SafetyModel load_corpus(const std::filesystem::path& dir) {
  auto manifest = corpus_manifest(dir);
  auto result = parse_file(manifest.model_path);
  if (!result.ok()) {
    std::string what = "corpus " + manifest.model_path.string() + " does not parse";
    if (!result.diagnostics.empty()) what += ": " + format_diagnostic(result.diagnostics.front());
    throw CorpusError(what, std::move(result.diagnostics));
  }
  return std::move(*result.model);
}

std::size_t count_top_components(const SafetyModel& model, const CorpusManifest& manifest) {
  const auto& boundary = manifest.boundary_components;
  return static_cast<std::size_t>(
      std::count_if(model.components.begin(), model.components.end(), [&](const Component& c) {
        return std::find(boundary.begin(), boundary.end(), c.id) == boundary.end();
      }));
}

}  // namespace stpa
