// Copyright (c) 2026 The SummaryLens Authors
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

#ifndef SUMMARYLENS_CONFIG_H_
#define SUMMARYLENS_CONFIG_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "summarylens/ingest.h"
#include "summarylens/summarizer.h"

namespace summarylens {

/// Engine and service settings.
///
/// File format: one `key = value` per line; blank lines and lines starting
/// with '#' are ignored; values run to the end of the line, trimmed.
/// Relative paths are resolved against the directory of the file.
///
///   bind                   address to listen on (127.0.0.1)
///   port                   1..65535 (8080)
///   data_dir               store directory (summarylens-data)
///   embeddings             GloVe text file
///   embeddings_max_tokens  vocabulary cap
///   k                      default summary length (5)
///   method                 textrank | frequency (textrank)
///   damping, tolerance, max_iterations
///   abbreviations, stopwords   word-list overrides
///   static_dir             UI bundle served at /
///   ocr.kind               fixture | external (fixture)
///   ocr.fixture_text       text returned by the fixture provider
///   ocr.fixture_file       same, read from a file
///   ocr.endpoint_url       http://host:port/path of an external provider
///   ocr.timeout_seconds    (15)
///
/// SUMMARYLENS_PORT, SUMMARYLENS_DATA_DIR and SUMMARYLENS_EMBEDDINGS in the
/// environment override the file.
struct ServiceConfig {
  std::string bind_address = "127.0.0.1";
  int port = 8080;
  std::filesystem::path data_dir = "summarylens-data";
  std::filesystem::path embeddings;
  std::optional<std::size_t> embeddings_max_tokens;
  std::optional<std::filesystem::path> abbreviations;
  std::optional<std::filesystem::path> stopwords;
  std::optional<std::filesystem::path> static_dir;
  SummaryConfig summary;
  OcrProviderConfig ocr;

  /// Startup checks: port range, summary settings and an existing
  /// embeddings file. Throws Error(kInvalidConfig).
  void Validate() const;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads the process environment.
std::optional<std::string> ProcessEnv(const std::string& name);

/// Raw `key = value` pairs. Throws MalformedLineError for a line without '='
/// or with an empty key.
std::map<std::string, std::string> ParseKeyValues(std::istream& in);

/// Applies `values` on top of `config`. Throws Error(kInvalidConfig) for an
/// unknown key or a bad value.
void ApplyKeyValues(const std::map<std::string, std::string>& values,
                    const std::filesystem::path& base_dir, ServiceConfig& config);

void ApplyEnvironment(const EnvLookup& env, ServiceConfig& config);

/// Defaults, then the file (if any), then the environment. Throws
/// Error(kIoFailure) if the file cannot be read.
ServiceConfig LoadServiceConfig(
    const std::optional<std::filesystem::path>& file,
    const EnvLookup& env = ProcessEnv);

}  // namespace summarylens

#endif  // SUMMARYLENS_CONFIG_H_
