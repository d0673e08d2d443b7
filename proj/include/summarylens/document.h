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

#ifndef SUMMARYLENS_DOCUMENT_H_
#define SUMMARYLENS_DOCUMENT_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace summarylens {

enum class DocumentSource { kOcr, kText, kFixture };

std::string_view SourceName(DocumentSource source);
std::optional<DocumentSource> ParseSource(std::string_view name);

/// UTC, microsecond resolution so that the ISO-8601 form round-trips.
using Timestamp =
    std::chrono::time_point<std::chrono::system_clock, std::chrono::microseconds>;

Timestamp Now();

/// "YYYY-MM-DDTHH:MM:SS.ffffffZ".
std::string FormatTimestamp(Timestamp t);
/// Accepts the FormatTimestamp form, with or without the fraction.
std::optional<Timestamp> ParseTimestamp(std::string_view text);

/// 32 lowercase hex digits from 128 random bits.
std::string GenerateDocumentId();

/// Ids become file names, so they are restricted to [A-Za-z0-9_-], 1 to 128
/// characters.
bool IsValidDocumentId(std::string_view id);

struct RawDocument {
  std::string id;
  DocumentSource source = DocumentSource::kText;
  std::string text;  // normalized
  Timestamp created_at{};

  friend bool operator==(const RawDocument&, const RawDocument&) = default;
};

}  // namespace summarylens

#endif  // SUMMARYLENS_DOCUMENT_H_
