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

#include "summarylens/config.h"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "summarylens/error.h"

namespace summarylens {
namespace fs = std::filesystem;
namespace {

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void Invalid(const std::string& key, const std::string& value) {
  throw Error(ErrorKind::kInvalidConfig,
              "invalid value '" + value + "' for " + key);
}

template <typename T>
T ParseNumber(const std::string& key, const std::string& value) {
  T out{};
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    Invalid(key, value);
  }
  return out;
}

fs::path Resolve(const fs::path& base_dir, const std::string& value) {
  const fs::path p(value);
  return p.is_relative() && !base_dir.empty() ? base_dir / p : p;
}

int ParsePort(const std::string& key, const std::string& value) {
  const int port = ParseNumber<int>(key, value);
  if (port < 1 || port > 65535) Invalid(key, value);
  return port;
}

}  // namespace

void ServiceConfig::Validate() const {
  if (port < 1 || port > 65535) {
    throw Error(ErrorKind::kInvalidConfig, "port out of range");
  }
  summary.Validate();
  std::error_code ec;
  if (embeddings.empty() || !fs::is_regular_file(embeddings, ec)) {
    throw Error(ErrorKind::kInvalidConfig,
                "embeddings file not found: '" + embeddings.string() + "'");
  }
  if (static_dir && !fs::is_directory(*static_dir, ec)) {
    throw Error(ErrorKind::kInvalidConfig,
                "static_dir not found: " + static_dir->string());
  }
}

std::optional<std::string> ProcessEnv(const std::string& name) {
  if (const char* value = std::getenv(name.c_str())) return std::string(value);
  return std::nullopt;
}

std::map<std::string, std::string> ParseKeyValues(std::istream& in) {
  std::map<std::string, std::string> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw MalformedLineError(line_no, "expected key = value");
    }
    const std::string key = Trim(trimmed.substr(0, eq));
    if (key.empty()) throw MalformedLineError(line_no, "empty key");
    values[key] = Trim(trimmed.substr(eq + 1));
  }
  return values;
}

void ApplyKeyValues(const std::map<std::string, std::string>& values,
                    const fs::path& base_dir, ServiceConfig& config) {
  for (const auto& [key, value] : values) {
    if (key == "bind") {
      config.bind_address = value;
    } else if (key == "port") {
      config.port = ParsePort(key, value);
    } else if (key == "data_dir") {
      config.data_dir = Resolve(base_dir, value);
    } else if (key == "embeddings") {
      config.embeddings = Resolve(base_dir, value);
    } else if (key == "embeddings_max_tokens") {
      const auto cap = ParseNumber<std::size_t>(key, value);
      if (cap == 0) Invalid(key, value);
      config.embeddings_max_tokens = cap;
    } else if (key == "k") {
      config.summary.k = ParseNumber<std::size_t>(key, value);
      if (config.summary.k < 1) Invalid(key, value);
    } else if (key == "method") {
      const auto method = ParseMethod(value);
      if (!method) Invalid(key, value);
      config.summary.method = *method;
    } else if (key == "damping") {
      config.summary.rank.damping = ParseNumber<double>(key, value);
    } else if (key == "tolerance") {
      config.summary.rank.tolerance = ParseNumber<double>(key, value);
    } else if (key == "max_iterations") {
      config.summary.rank.max_iterations = ParseNumber<int>(key, value);
    } else if (key == "abbreviations") {
      config.abbreviations = Resolve(base_dir, value);
    } else if (key == "stopwords") {
      config.stopwords = Resolve(base_dir, value);
    } else if (key == "static_dir") {
      config.static_dir = Resolve(base_dir, value);
    } else if (key == "ocr.kind") {
      if (value == "fixture") {
        config.ocr.kind = OcrProviderConfig::Kind::kFixture;
      } else if (value == "external") {
        config.ocr.kind = OcrProviderConfig::Kind::kExternal;
      } else {
        Invalid(key, value);
      }
    } else if (key == "ocr.fixture_text") {
      config.ocr.fixture_text = value;
    } else if (key == "ocr.fixture_file") {
      const fs::path path = Resolve(base_dir, value);
      std::ifstream in(path, std::ios::binary);
      if (!in) Invalid(key, value);
      std::ostringstream text;
      text << in.rdbuf();
      config.ocr.fixture_text = text.str();
    } else if (key == "ocr.endpoint_url") {
      config.ocr.endpoint_url = value;
    } else if (key == "ocr.timeout_seconds") {
      const double seconds = ParseNumber<double>(key, value);
      if (!(seconds > 0)) Invalid(key, value);
      config.ocr.timeout = std::chrono::milliseconds(
          static_cast<long long>(seconds * 1000.0 + 0.5));
    } else {
      throw Error(ErrorKind::kInvalidConfig, "unknown config key '" + key + "'");
    }
  }
  config.summary.rank.Validate();
}

void ApplyEnvironment(const EnvLookup& env, ServiceConfig& config) {
  if (auto port = env("SUMMARYLENS_PORT")) {
    config.port = ParsePort("SUMMARYLENS_PORT", *port);
  }
  if (auto dir = env("SUMMARYLENS_DATA_DIR")) config.data_dir = *dir;
  if (auto path = env("SUMMARYLENS_EMBEDDINGS")) config.embeddings = *path;
}

ServiceConfig LoadServiceConfig(const std::optional<fs::path>& file,
                                const EnvLookup& env) {
  ServiceConfig config;
  if (file) {
    std::ifstream in(*file);
    if (!in) {
      throw Error(ErrorKind::kIoFailure, "cannot read config " + file->string());
    }
    ApplyKeyValues(ParseKeyValues(in), file->parent_path(), config);
  }
  ApplyEnvironment(env, config);
  return config;
}

}  // namespace summarylens
