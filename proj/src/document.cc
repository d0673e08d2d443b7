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

#include "summarylens/document.h"

#include <array>
#include <charconv>
#include <cstdio>
#include <random>

namespace summarylens {

std::string_view SourceName(DocumentSource source) {
  switch (source) {
    case DocumentSource::kOcr: return "ocr";
    case DocumentSource::kText: return "text";
    case DocumentSource::kFixture: return "fixture";
  }
  return "text";
}

std::optional<DocumentSource> ParseSource(std::string_view name) {
  if (name == "ocr") return DocumentSource::kOcr;
  if (name == "text") return DocumentSource::kText;
  if (name == "fixture") return DocumentSource::kFixture;
  return std::nullopt;
}

Timestamp Now() {
  return std::chrono::floor<std::chrono::microseconds>(
      std::chrono::system_clock::now());
}

std::string FormatTimestamp(Timestamp t) {
  using namespace std::chrono;
  const auto day = floor<days>(t);
  const year_month_day ymd{day};
  const hh_mm_ss hms{t - day};
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%04d-%02u-%02uT%02d:%02d:%02d.%06lldZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()),
                static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()),
                static_cast<long long>(hms.subseconds().count()));
  return buf.data();
}

std::optional<Timestamp> ParseTimestamp(std::string_view text) {
  using namespace std::chrono;
  auto number = [&](std::size_t pos, std::size_t len, int& out) {
    if (pos + len > text.size()) return false;
    const char* first = text.data() + pos;
    const auto [ptr, ec] = std::from_chars(first, first + len, out);
    return ec == std::errc() && ptr == first + len;
  };
  int y, mo, d, h, mi, s;
  if (text.size() < 20 || text[4] != '-' || text[7] != '-' || text[10] != 'T' ||
      text[13] != ':' || text[16] != ':' || text.back() != 'Z' ||
      !number(0, 4, y) || !number(5, 2, mo) || !number(8, 2, d) ||
      !number(11, 2, h) || !number(14, 2, mi) || !number(17, 2, s)) {
    return std::nullopt;
  }
  long long micros = 0;
  if (text.size() > 20) {
    if (text[19] != '.') return std::nullopt;
    const std::string_view fraction = text.substr(20, text.size() - 21);
    if (fraction.empty() || fraction.size() > 6) return std::nullopt;
    int value = 0;
    if (!number(20, fraction.size(), value) || value < 0) return std::nullopt;
    micros = value;
    for (std::size_t i = fraction.size(); i < 6; ++i) micros *= 10;
  }
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                           day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 60) return std::nullopt;
  return Timestamp{sys_days{ymd}} + hours{h} + minutes{mi} + seconds{s} +
         microseconds{micros};
}

std::string GenerateDocumentId() {
  thread_local std::mt19937_64 engine = [] {
    std::random_device device;
    std::seed_seq seed{device(), device(), device(), device()};
    return std::mt19937_64(seed);
  }();
  std::array<char, 33> buf{};
  std::snprintf(buf.data(), buf.size(), "%016llx%016llx",
                static_cast<unsigned long long>(engine()),
                static_cast<unsigned long long>(engine()));
  return buf.data();
}

bool IsValidDocumentId(std::string_view id) {
  if (id.empty() || id.size() > 128) return false;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

}  // namespace summarylens
