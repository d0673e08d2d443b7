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

#ifndef SUMMARYLENS_UNICODE_H_
#define SUMMARYLENS_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace summarylens {

/// Decodes UTF-8 into Unicode scalar values. Malformed sequences, surrogates
/// and overlong forms decode to U+FFFD, one replacement per bad byte.
std::u32string DecodeUtf8(std::string_view utf8);

std::string EncodeUtf8(std::u32string_view text);

/// Number of Unicode scalar values in `utf8` (as DecodeUtf8 would count them).
std::size_t CodePointLength(std::string_view utf8);

/// Half-open slice [start, end) counted in scalar values. Out-of-range
/// bounds are clamped.
std::string SliceCodePoints(std::string_view utf8, std::size_t start,
                            std::size_t end);

bool IsWhitespace(char32_t c);
bool IsLineBreak(char32_t c);

// Letters and digits. ASCII plus the Latin, Greek and Cyrillic blocks and
// the CJK ideographs; everything else counts as a separator.
bool IsAlphanumeric(char32_t c);
bool IsUppercase(char32_t c);
bool IsDigit(char32_t c);
char32_t ToLower(char32_t c);

}  // namespace summarylens

#endif  // SUMMARYLENS_UNICODE_H_
