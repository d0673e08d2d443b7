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

#include "summarylens/ranker.h"

#include <unordered_map>

namespace summarylens {

void RankConfig::Validate() const {
  if (!(damping > 0.0 && damping < 1.0)) {
    throw Error(ErrorKind::kInvalidConfig, "damping must lie strictly in (0, 1)");
  }
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw Error(ErrorKind::kInvalidConfig, "tolerance must be positive");
  }
  if (max_iterations < 1) {
    throw Error(ErrorKind::kInvalidConfig, "max_iterations must be at least 1");
  }
}

RankScores FrequencyScores(std::span<const TokenList> sentence_tokens) {
  const auto n = static_cast<Eigen::Index>(sentence_tokens.size());
  if (n == 0) {
    throw Error(ErrorKind::kEmptySentenceList,
                "frequency scoring needs at least one sentence");
  }
  std::unordered_map<std::string, double> counts;
  for (const auto& tokens : sentence_tokens) {
    for (const auto& token : tokens) counts[token] += 1.0;
  }
  double max_count = 0.0;
  for (const auto& [token, count] : counts) max_count = std::max(max_count, count);

  RankScores raw = RankScores::Zero(n);
  if (max_count > 0.0) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& tokens = sentence_tokens[static_cast<std::size_t>(i)];
      double sum = 0.0;
      for (const auto& token : tokens) sum += counts[token] / max_count;
      raw(i) = sum / static_cast<double>(std::max<std::size_t>(1, tokens.size()));
    }
  }
  const double total = raw.sum();
  if (total <= 0.0) return RankScores::Constant(n, 1.0 / static_cast<double>(n));
  return raw / total;
}

}  // namespace summarylens
