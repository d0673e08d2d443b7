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

#ifndef SUMMARYLENS_EMBEDDINGS_H_
#define SUMMARYLENS_EMBEDDINGS_H_

#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "summarylens/error.h"
#include "summarylens/segmenter.h"

namespace summarylens {

template <typename Scalar>
using SentenceVectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using SentenceVector = SentenceVectorT<double>;

/// Token -> dense vector map. Every row has `dim()` finite components.
/// Immutable after loading and safe to share across threads.
template <typename Scalar>
class EmbeddingTableT {
 public:
  using Vector = SentenceVectorT<Scalar>;
  using Matrix =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  EmbeddingTableT(Eigen::Index dim, Matrix vectors,
                  std::unordered_map<std::string, Eigen::Index> rows)
      : dim_(dim), vectors_(std::move(vectors)), rows_(std::move(rows)) {}

  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }

  bool contains(const std::string& token) const {
    return rows_.count(token) > 0;
  }

  /// Row view for `token`, or nullopt when out of vocabulary.
  std::optional<typename Matrix::ConstRowXpr> lookup(
      const std::string& token) const {
    const auto it = rows_.find(token);
    if (it == rows_.end()) return std::nullopt;
    return vectors_.row(it->second);
  }

 private:
  Eigen::Index dim_;
  Matrix vectors_;
  std::unordered_map<std::string, Eigen::Index> rows_;
};

using EmbeddingTable = EmbeddingTableT<double>;

namespace detail {

inline std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

template <typename Scalar>
bool ParseFinite(std::string_view field, Scalar& out) {
  // from_chars rejects a leading '+', which some exporters emit.
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size() &&
         std::isfinite(out);
}

}  // namespace detail

/// Reads GloVe text format: `<token> <f1> ... <fD>` per line, no header.
/// The dimension comes from the first line. Duplicate tokens keep their
/// first vector. `max_entries` caps the vocabulary; lines past the cap are
/// not read.
///
/// Throws MalformedLineError (1-based line number) on a wrong float count
/// or an unparsable/non-finite float, and Error(kEmptySource) when the
/// stream has no lines.
template <typename Scalar = double>
EmbeddingTableT<Scalar> LoadEmbeddingTable(
    std::istream& source, std::optional<std::size_t> max_entries = {}) {
  using Table = EmbeddingTableT<Scalar>;
  std::vector<Scalar> values;
  std::unordered_map<std::string, Eigen::Index> rows;
  Eigen::Index dim = 0;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(source, line)) {
    if (max_entries && rows.size() >= *max_entries) break;
    ++line_no;
    std::string_view view(line);
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    const auto fields = detail::SplitFields(view);
    if (fields.size() < 2) {
      throw MalformedLineError(line_no, "expected a token and a vector");
    }
    const auto count = static_cast<Eigen::Index>(fields.size() - 1);
    if (line_no == 1) dim = count;
    if (count != dim) {
      throw MalformedLineError(line_no, "expected " + std::to_string(dim) +
                                            " components, got " +
                                            std::to_string(count));
    }
    std::vector<Scalar> row(static_cast<std::size_t>(dim));
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (!detail::ParseFinite(fields[static_cast<std::size_t>(i) + 1],
                               row[static_cast<std::size_t>(i)])) {
        throw MalformedLineError(
            line_no, "bad component '" +
                         std::string(fields[static_cast<std::size_t>(i) + 1]) +
                         "'");
      }
    }
    const auto next = static_cast<Eigen::Index>(rows.size());
    if (rows.emplace(std::string(fields[0]), next).second) {
      values.insert(values.end(), row.begin(), row.end());
    }
  }
  if (line_no == 0) throw Error(ErrorKind::kEmptySource, "embedding source is empty");

  typename Table::Matrix vectors(static_cast<Eigen::Index>(rows.size()), dim);
  std::copy(values.begin(), values.end(), vectors.data());
  return Table(dim, std::move(vectors), std::move(rows));
}

/// Throws Error(kIoFailure) if the file cannot be opened.
EmbeddingTable LoadEmbeddingTableFile(
    const std::filesystem::path& path,
    std::optional<std::size_t> max_entries = {});

/// Mean of the in-vocabulary token vectors; the zero vector when none of the
/// tokens are known.
template <typename Scalar>
SentenceVectorT<Scalar> MeanSentenceVector(const EmbeddingTableT<Scalar>& table,
                                           const TokenList& tokens) {
  SentenceVectorT<Scalar> sum = SentenceVectorT<Scalar>::Zero(table.dim());
  std::size_t found = 0;
  for (const auto& token : tokens) {
    if (auto row = table.lookup(token)) {
      sum += row->transpose();
      ++found;
    }
  }
  if (found > 0) sum /= static_cast<Scalar>(found);
  return sum;
}

/// dot(a, b) / (|a| |b|), or 0 when either vector is zero.
/// Throws Error(kDimensionMismatch) when the lengths differ.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar CosineSimilarity(const Eigen::MatrixBase<DerivedA>& a,
                                           const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "cosine of vectors with " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()) + " components");
  }
  const Scalar norms = a.norm() * b.norm();
  if (norms == Scalar(0)) return Scalar(0);
  return a.dot(b) / norms;
}

}  // namespace summarylens

#endif  // SUMMARYLENS_EMBEDDINGS_H_
