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

#include "summarylens/segmenter.h"

#include <fstream>
#include <istream>
#include <sstream>

#include "summarylens/error.h"
#include "summarylens/unicode.h"

namespace summarylens {

namespace detail {
extern const std::string_view kBundledAbbreviations;
extern const std::string_view kBundledStopwords;
}  // namespace detail

namespace {

std::string Lowercase(std::string_view word) {
  std::u32string chars = DecodeUtf8(word);
  for (char32_t& c : chars) c = ToLower(c);
  return EncodeUtf8(chars);
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool IsTerminator(char32_t c) { return c == U'.' || c == U'!' || c == U'?'; }

std::size_t SkipWhitespace(std::u32string_view text, std::size_t pos) {
  while (pos < text.size() && IsWhitespace(text[pos])) ++pos;
  return pos;
}

// The word the terminator at `pos` closes, minus any leading punctuation.
std::u32string_view WordBefore(std::u32string_view text, std::size_t begin,
                               std::size_t pos) {
  std::size_t first = pos;
  while (first > begin && !IsWhitespace(text[first - 1])) --first;
  while (first < pos && !IsAlphanumeric(text[first])) ++first;
  return text.substr(first, pos - first);
}

}  // namespace

std::vector<std::string> ParseWordList(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view entry = Trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    words.emplace_back(entry);
  }
  return words;
}

std::vector<std::string> ParseWordList(std::string_view contents) {
  std::istringstream in{std::string(contents)};
  return ParseWordList(in);
}

Lexicon::Lexicon(const std::vector<std::string>& abbreviations,
                 const std::vector<std::string>& stopwords) {
  for (const auto& a : abbreviations) abbreviations_.insert(Lowercase(a));
  for (const auto& s : stopwords) stopwords_.insert(Lowercase(s));
}

const Lexicon& Lexicon::Bundled() {
  static const Lexicon bundled(ParseWordList(detail::kBundledAbbreviations),
                               ParseWordList(detail::kBundledStopwords));
  return bundled;
}

Lexicon Lexicon::FromFiles(const std::filesystem::path& abbreviations,
                           const std::filesystem::path& stopwords) {
  auto read = [](const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::kIoFailure,
                  "cannot read word list " + path.string());
    }
    return ParseWordList(in);
  };
  return Lexicon(read(abbreviations), read(stopwords));
}

bool Lexicon::IsAbbreviation(std::string_view token) const {
  return abbreviations_.count(Lowercase(token)) > 0;
}

bool Lexicon::IsStopword(std::string_view token) const {
  return stopwords_.count(Lowercase(token)) > 0;
}

std::string NormalizeText(std::string_view raw) {
  const std::u32string in = DecodeUtf8(raw);
  std::u32string out;
  out.reserve(in.size());
  bool pending_space = false;
  for (std::size_t i = 0; i < in.size();) {
    const char32_t c = in[i];
    if (c == U'-' && i + 1 < in.size() && IsLineBreak(in[i + 1])) {
      // "sum-\nmary" -> "summary"; indentation on the next line goes too.
      i = SkipWhitespace(in, i + 1);
      continue;
    }
    if (IsWhitespace(c)) {
      pending_space = !out.empty();
      ++i;
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
    ++i;
  }
  return EncodeUtf8(out);
}

std::vector<Sentence> SplitSentences(std::string_view text,
                                     const Lexicon& lexicon) {
  const std::u32string chars = DecodeUtf8(text);
  const std::u32string_view view(chars);
  std::vector<Sentence> sentences;

  auto emit = [&](std::size_t start, std::size_t end) {
    while (end > start && IsWhitespace(view[end - 1])) --end;
    if (end == start) return;
    sentences.push_back(Sentence{sentences.size(),
                                 EncodeUtf8(view.substr(start, end - start)),
                                 Span{start, end}});
  };

  std::size_t start = SkipWhitespace(view, 0);
  for (std::size_t i = start; i < view.size(); ++i) {
    if (!IsTerminator(view[i])) continue;
    bool boundary = false;
    if (i + 1 == view.size()) {
      boundary = true;
    } else if (IsWhitespace(view[i + 1])) {
      const std::size_t next = SkipWhitespace(view, i + 1);
      boundary = next == view.size() || IsUppercase(view[next]) ||
                 IsDigit(view[next]);
    }
    if (boundary && view[i] == U'.') {
      const auto word = WordBefore(view, start, i);
      if (!word.empty() && lexicon.IsAbbreviation(EncodeUtf8(word))) {
        boundary = false;
      }
    }
    if (!boundary) continue;
    emit(start, i + 1);
    start = SkipWhitespace(view, i + 1);
    i = start - 1;  // start > i here, so no wrap
  }
  if (start < view.size()) emit(start, view.size());
  return sentences;
}

TokenList Tokenize(std::string_view sentence_text) {
  TokenList tokens;
  std::u32string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(EncodeUtf8(current));
    current.clear();
  };
  for (char32_t c : DecodeUtf8(sentence_text)) {
    if (IsAlphanumeric(c)) {
      current.push_back(ToLower(c));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

TokenList RemoveStopwords(const TokenList& tokens, const Lexicon& lexicon) {
  TokenList kept;
  kept.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (!lexicon.IsStopword(token)) kept.push_back(token);
  }
  return kept;
}

}  // namespace summarylens
