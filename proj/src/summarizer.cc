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

#include "summarylens/summarizer.h"

#include <string>

#include "summarylens/error.h"

namespace summarylens {
namespace {

std::vector<Sentence> Segment(const RawDocument& document,
                              const Lexicon& lexicon) {
  auto sentences = SplitSentences(NormalizeText(document.text), lexicon);
  if (sentences.empty()) {
    throw Error(ErrorKind::kEmptyDocument,
                "empty document: no sentences in '" + document.id + "'");
  }
  return sentences;
}

Summary Rank(const RawDocument& document, const SummaryConfig& config,
             const EmbeddingTable* table, const Lexicon& lexicon) {
  config.Validate();
  if (config.method == SummaryMethod::kAbstractive) {
    throw Error(ErrorKind::kUnsupportedMethod,
                "abstractive summarization is not available");
  }
  const auto sentences = Segment(document, lexicon);
  std::vector<TokenList> tokens;
  tokens.reserve(sentences.size());
  for (const auto& sentence : sentences) {
    tokens.push_back(RemoveStopwords(Tokenize(sentence.text), lexicon));
  }

  RankScores scores;
  bool converged = true;
  if (config.method == SummaryMethod::kFrequency) {
    scores = FrequencyScores(tokens);
  } else {
    const auto n = static_cast<Eigen::Index>(sentences.size());
    Eigen::MatrixXd vectors(n, table->dim());
    for (Eigen::Index i = 0; i < n; ++i) {
      vectors.row(i) =
          MeanSentenceVector(*table, tokens[static_cast<std::size_t>(i)])
              .transpose();
    }
    const auto ranked = TextRank(BuildSimilarityGraph(vectors), config.rank);
    scores = ranked.scores;
    converged = ranked.converged();
  }

  Summary summary;
  summary.document_id = document.id;
  summary.config = config;
  summary.selected = SelectTopK(scores, config.k);
  for (std::size_t index : summary.selected) {
    summary.sentences.push_back(sentences[index].text);
  }
  summary.scores.assign(scores.data(), scores.data() + scores.size());
  summary.converged = converged;
  return summary;
}

}  // namespace

std::string_view MethodName(SummaryMethod method) {
  switch (method) {
    case SummaryMethod::kTextRank: return "textrank";
    case SummaryMethod::kFrequency: return "frequency";
    case SummaryMethod::kAbstractive: return "abstractive";
  }
  return "textrank";
}

std::optional<SummaryMethod> ParseMethod(std::string_view name) {
  if (name == "textrank") return SummaryMethod::kTextRank;
  if (name == "frequency") return SummaryMethod::kFrequency;
  if (name == "abstractive") return SummaryMethod::kAbstractive;
  return std::nullopt;
}

void SummaryConfig::Validate() const {
  if (k < 1) throw Error(ErrorKind::kInvalidConfig, "k must be at least 1");
  rank.Validate();
}

Summary Summarize(const RawDocument& document, const SummaryConfig& config,
                  const EmbeddingTable& table, const Lexicon& lexicon) {
  return Rank(document, config, &table, lexicon);
}

Summary SummarizeByFrequency(const RawDocument& document, std::size_t k,
                             const Lexicon& lexicon) {
  SummaryConfig config;
  config.method = SummaryMethod::kFrequency;
  config.k = k;
  return Rank(document, config, nullptr, lexicon);
}

HighlightedDocument Highlights(const RawDocument& document,
                               const Summary& summary, const Lexicon& lexicon) {
  if (summary.document_id != document.id) {
    throw Error(ErrorKind::kDocumentMismatch,
                "summary of '" + summary.document_id +
                    "' does not belong to document '" + document.id + "'");
  }
  HighlightedDocument out;
  out.text = NormalizeText(document.text);
  if (summary.selected.empty()) return out;

  const auto sentences = SplitSentences(out.text, lexicon);
  if (summary.selected.size() != summary.sentences.size()) {
    throw Error(ErrorKind::kDocumentMismatch, "summary is inconsistent");
  }
  for (std::size_t i = 0; i < summary.selected.size(); ++i) {
    const std::size_t index = summary.selected[i];
    if (index >= sentences.size() ||
        sentences[index].text != summary.sentences[i]) {
      throw Error(ErrorKind::kDocumentMismatch,
                  "summary sentence " + std::to_string(index) +
                      " does not match the document");
    }
    out.highlight_spans.push_back(sentences[index].span);
  }
  return out;
}

}  // namespace summarylens
