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

#ifndef SUMMARYLENS_INGEST_H_
#define SUMMARYLENS_INGEST_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include "summarylens/document.h"

namespace summarylens {

struct OcrProviderConfig {
  enum class Kind { kFixture, kExternal };

  Kind kind = Kind::kFixture;
  std::optional<std::string> fixture_text;  // fixture only
  std::optional<std::string> endpoint_url;  // external only, http://host[:port]/path
  std::chrono::milliseconds timeout{15000};

  /// Throws Error(kMissingFixtureText) for a fixture without text and
  /// Error(kInvalidConfig) for any other missing or extra field.
  void Validate() const;
};

/// Fixture: returns `fixture_text` verbatim, whatever the image.
/// External: POSTs the image bytes as application/octet-stream to
/// `endpoint_url` and expects 200 with {"text": "..."}.
///
/// Throws Error(kProviderUnreachable), Error(kProviderTimeout) or
/// ProviderBadResponseError for provider failures, and
/// Error(kInvalidArgument) for an empty image sent to an external provider.
std::string OcrExtract(const OcrProviderConfig& provider, std::string_view image);

/// Normalizes `raw` into a new document with a fresh id and the current time.
/// Throws Error(kEmptyAfterNormalization) when nothing but whitespace remains.
RawDocument IngestText(std::string_view raw, DocumentSource source);

/// Same, with caller-chosen identity.
RawDocument IngestText(std::string_view raw, DocumentSource source,
                       std::string id, Timestamp created_at);

}  // namespace summarylens

#endif  // SUMMARYLENS_INGEST_H_
