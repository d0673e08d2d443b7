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

#ifndef SUMMARYLENS_SERIALIZATION_H_
#define SUMMARYLENS_SERIALIZATION_H_

#include <string>

#include "json.hpp"
#include "summarylens/document.h"
#include "summarylens/summarizer.h"

namespace summarylens {

using Json = nlohmann::ordered_json;

// Canonical JSON forms. Field order is fixed:
//   Summary:             document_id, method, k, selected, sentences, scores,
//                        converged
//   HighlightedDocument: text, highlight_spans ([start, end] pairs)
//   RawDocument:         id, source, text, created_at
//
// The FromJson functions throw Error(kInvalidArgument) on a missing or
// mistyped field. The rank settings are not part of the Summary form, so
// SummaryFromJson restores the default RankConfig.

Json ToJson(const Summary& summary);
Json ToJson(const HighlightedDocument& highlighted);
Json ToJson(const RawDocument& document);

Summary SummaryFromJson(const Json& json);
HighlightedDocument HighlightedDocumentFromJson(const Json& json);
RawDocument RawDocumentFromJson(const Json& json);

/// Compact dump plus a trailing newline. This exact byte string is what the
/// CLI prints, the service returns and the store writes.
std::string Canonical(const Json& json);

}  // namespace summarylens

#endif  // SUMMARYLENS_SERIALIZATION_H_
