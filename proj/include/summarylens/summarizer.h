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

#ifndef SUMMARYLENS_SUMMARIZER_H_
#define SUMMARYLENS_SUMMARIZER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "summarylens/document.h"
#include "summarylens/embeddings.h"
#include "summarylens/ranker.h"
#include "summarylens/segmenter.h"

namespace summarylens {

/// kAbstractive is reserved: it parses, but Summarize rejects it with
/// Error(kUnsupportedMethod).
enum class SummaryMethod { kTextRank, kFrequency, kAbstractive };

std::string_view MethodName(SummaryMethod method);
std::optional<SummaryMethod> ParseMethod(std::string_view name);

struct SummaryConfig {
  SummaryMethod method = SummaryMethod::kTextRank;
  std::size_t k = 5;
  RankConfig rank;

  /// Throws Error(kInvalidConfig) for k < 1 or a bad rank config.
  void Validate() const;

  friend bool operator==(const SummaryConfig&, const SummaryConfig&) = default;
};

struct Summary {
  std::string document_id;
  SummaryConfig config;
  std::vector<std::size_t> selected;   // strictly ascending
  std::vector<std::string> sentences;  // verbatim, parallel to `selected`
  std::vector<double> scores;          // one per document sentence
  bool converged = true;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct HighlightedDocument {
  std::string text;
  std::vector<Span> highlight_spans;

  friend bool operator==(const HighlightedDocument&,
                         const HighlightedDocument&) = default;
};

/// normalize -> split -> tokenize + drop stopwords -> score -> top k.
/// `table` is only consulted for the textrank method.
///
/// Throws Error(kEmptyDocument) when segmentation yields no sentences,
/// Error(kUnsupportedMethod) for kAbstractive and Error(kInvalidConfig) for
/// an invalid config.
Summary Summarize(const RawDocument& document, const SummaryConfig& config,
                  const EmbeddingTable& table,
                  const Lexicon& lexicon = Lexicon::Bundled());

/// Frequency-only entry point; needs no embedding table.
Summary SummarizeByFrequency(const RawDocument& document, std::size_t k,
                             const Lexicon& lexicon = Lexicon::Bundled());

/// Spans of the summary's sentences inside the normalized document text.
/// Throws Error(kDocumentMismatch) if the summary was not produced from
/// `document`.
HighlightedDocument Highlights(const RawDocument& document,
                               const Summary& summary,
                               const Lexicon& lexicon = Lexicon::Bundled());

}  // namespace summarylens

#endif  // SUMMARYLENS_SUMMARIZER_H_
