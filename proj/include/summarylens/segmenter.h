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

#ifndef SUMMARYLENS_SEGMENTER_H_
#define SUMMARYLENS_SEGMENTER_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace summarylens {

/// Half-open range of Unicode scalar offsets into a normalized text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Sentence {
  std::size_t index = 0;
  std::string text;
  Span span;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// Lowercase alphanumeric tokens in document order.
using TokenList = std::vector<std::string>;

/// Reads a word list: one entry per line, surrounding whitespace trimmed,
/// blank lines and lines starting with '#' skipped.
std::vector<std::string> ParseWordList(std::istream& in);
std::vector<std::string> ParseWordList(std::string_view contents);

/// Abbreviation and stopword lists used by the segmenter. Immutable once
/// built, so a single instance can be shared across threads.
class Lexicon {
 public:
  Lexicon(const std::vector<std::string>& abbreviations,
          const std::vector<std::string>& stopwords);

  /// The lists compiled in from data/abbreviations.txt and data/stopwords.txt.
  static const Lexicon& Bundled();

  /// Throws Error(kIoFailure) if either file cannot be read.
  static Lexicon FromFiles(const std::filesystem::path& abbreviations,
                           const std::filesystem::path& stopwords);

  /// Case-insensitive.
  bool IsAbbreviation(std::string_view token) const;
  bool IsStopword(std::string_view token) const;

  std::size_t abbreviation_count() const { return abbreviations_.size(); }
  std::size_t stopword_count() const { return stopwords_.size(); }

 private:
  std::unordered_set<std::string> abbreviations_;
  std::unordered_set<std::string> stopwords_;
};

/// Joins words hyphenated across a line break, collapses every whitespace
/// run to one space and trims. Output is always valid UTF-8.
std::string NormalizeText(std::string_view raw);

/// Sentences end at '.', '!' or '?' when followed by whitespace and then an
/// uppercase letter or digit, or by the end of the text. A '.' closing a
/// listed abbreviation never ends a sentence. Any unterminated tail becomes
/// the last sentence.
std::vector<Sentence> SplitSentences(std::string_view text,
                                     const Lexicon& lexicon = Lexicon::Bundled());

/// Lowercases and splits on every run of non-alphanumeric characters.
TokenList Tokenize(std::string_view sentence_text);

TokenList RemoveStopwords(const TokenList& tokens,
                          const Lexicon& lexicon = Lexicon::Bundled());

}  // namespace summarylens

#endif  // SUMMARYLENS_SEGMENTER_H_
