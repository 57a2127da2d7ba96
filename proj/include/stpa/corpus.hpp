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

#ifndef STPA_CORPUS_HPP_
#define STPA_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "stpa/dsl.hpp"
#include "stpa/model.hpp"

namespace stpa {

// Reads a whole file. Throws std::runtime_error carrying the OS reason.
std::string read_text_file(const std::filesystem::path& path);

// Reads and parses; I/O failures throw as read_text_file does.
ParseResult parse_file(const std::filesystem::path& path);

// Thrown by load_corpus when the bundled model does not parse.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(const std::string& what, std::vector<ParseDiagnostic> diagnostics)
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}
  const std::vector<ParseDiagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<ParseDiagnostic> diagnostics_;
};

struct CorpusCounts {
  std::size_t accidents = 3;
  std::size_t hazards = 7;
  std::size_t top_components = 7;
  std::size_t loops = 9;
};

// The cooperative-driving reference model and its golden reports.
struct CorpusManifest {
  std::filesystem::path model_path;
  // "md", "json", "csv" -> golden file.
  std::map<std::string, std::filesystem::path> golden_paths;
  CorpusCounts expected_counts;
  // Loop endpoints outside the cooperative module's own architecture.
  std::vector<Id> boundary_components{"Driver", "EgoVehicle"};
};

// Directory holding gcdc.stpa and golden/, fixed at build time.
std::filesystem::path default_corpus_dir();

CorpusManifest corpus_manifest(const std::filesystem::path& dir = default_corpus_dir());

SafetyModel load_corpus(const std::filesystem::path& dir = default_corpus_dir());

// Components that belong to the module architecture proper, i.e. excluding
// the manifest's boundary components.
std::size_t count_top_components(const SafetyModel& model, const CorpusManifest& manifest);

}  // namespace stpa

#endif  // STPA_CORPUS_HPP_
