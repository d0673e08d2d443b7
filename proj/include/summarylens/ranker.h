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

#ifndef SUMMARYLENS_RANKER_H_
#define SUMMARYLENS_RANKER_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "summarylens/embeddings.h"
#include "summarylens/error.h"
#include "summarylens/segmenter.h"

namespace summarylens {

template <typename Scalar>
using RankScoresT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
/// Per-sentence relevance: nonnegative, sums to 1.
using RankScores = RankScoresT<double>;

/// Sentence-similarity graph. Symmetric, zero diagonal, entries finite and
/// nonnegative.
template <typename Scalar>
struct SimilarityGraphT {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> weights;

  Eigen::Index size() const { return weights.rows(); }
};
using SimilarityGraph = SimilarityGraphT<double>;

struct RankConfig {
  double damping = 0.85;
  double tolerance = 1e-6;  // L1 distance between successive iterates
  int max_iterations = 100;

  /// Throws Error(kInvalidConfig) unless 0 < damping < 1, tolerance > 0 and
  /// max_iterations >= 1.
  void Validate() const;

  friend bool operator==(const RankConfig&, const RankConfig&) = default;
};

/// Raised alongside a result, never instead of one.
struct DidNotConverge {
  int iterations = 0;
  double residual = 0;
};

template <typename Scalar>
struct TextRankResultT {
  RankScoresT<Scalar> scores;
  int iterations = 0;
  Scalar residual = 0;
  std::optional<DidNotConverge> did_not_converge;

  bool converged() const { return !did_not_converge.has_value(); }
};
using TextRankResult = TextRankResultT<double>;

/// Rows of `vectors` are sentence vectors. weights(i, j) is the cosine of
/// rows i and j clamped below at 0; the diagonal is 0.
template <typename Derived>
SimilarityGraphT<typename Derived::Scalar> BuildSimilarityGraph(
    const Eigen::MatrixBase<Derived>& vectors) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = vectors.rows();
  SimilarityGraphT<Scalar> graph;
  graph.weights.setZero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Scalar w =
          std::max(Scalar(0), CosineSimilarity(vectors.row(i), vectors.row(j)));
      graph.weights(i, j) = w;
      graph.weights(j, i) = w;
    }
  }
  return graph;
}

template <typename Scalar>
SimilarityGraphT<Scalar> BuildSimilarityGraph(
    std::span<const SentenceVectorT<Scalar>> vectors) {
  if (vectors.empty()) return {};
  const auto dim = vectors.front().size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> rows(
      static_cast<Eigen::Index>(vectors.size()), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "sentence vectors have differing dimensions");
    }
    rows.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  }
  return BuildSimilarityGraph(rows);
}

/// Row-stochastic transition matrix of `weights`. A row with zero total
/// weight (dangling sentence) becomes uniform.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
TransitionMatrix(const Eigen::MatrixBase<Derived>& weights) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = weights.rows();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> p(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Scalar row_sum = weights.row(i).sum();
    if (row_sum > Scalar(0)) {
      p.row(i) = weights.row(i) / row_sum;
    } else {
      p.row(i).setConstant(Scalar(1) / static_cast<Scalar>(n));
    }
  }
  return p;
}

/// Weighted PageRank by power iteration from the uniform vector:
///
///   s' = (1 - d) / n + d * P^T s
///
/// stopping once |s' - s|_1 < tolerance. Hitting max_iterations first still
/// returns the last iterate, flagged with `did_not_converge`. The result is
/// renormalized to sum to 1.
///
/// Throws Error(kEmptyGraph) for n = 0, Error(kInvalidConfig) for a bad
/// config and Error(kInvalidArgument) for a non-square graph or a negative
/// or non-finite weight.
template <typename Scalar>
TextRankResultT<Scalar> TextRank(const SimilarityGraphT<Scalar>& graph,
                                 const RankConfig& config = {}) {
  config.Validate();
  const auto& w = graph.weights;
  const Eigen::Index n = w.rows();
  if (n == 0) throw Error(ErrorKind::kEmptyGraph, "textrank on an empty graph");
  if (w.cols() != n) {
    throw Error(ErrorKind::kInvalidArgument, "similarity graph is not square");
  }
  if (!w.allFinite() || (w.array() < Scalar(0)).any()) {
    throw Error(ErrorKind::kInvalidArgument,
                "similarity weights must be finite and nonnegative");
  }

  const Scalar d = static_cast<Scalar>(config.damping);
  const Scalar teleport = (Scalar(1) - d) / static_cast<Scalar>(n);
  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> step =
      d * TransitionMatrix(w).transpose();

  TextRankResultT<Scalar> result;
  RankScoresT<Scalar> s =
      RankScoresT<Scalar>::Constant(n, Scalar(1) / static_cast<Scalar>(n));
  RankScoresT<Scalar> next(n);
  Scalar residual = std::numeric_limits<Scalar>::infinity();
  int iterations = 0;
  while (iterations < config.max_iterations) {
    next.noalias() = step * s;
    next.array() += teleport;
    residual = (next - s).template lpNorm<1>();
    s.swap(next);
    ++iterations;
    if (residual < static_cast<Scalar>(config.tolerance)) break;
  }
  s /= s.sum();

  result.scores = std::move(s);
  result.iterations = iterations;
  result.residual = residual;
  if (!(residual < static_cast<Scalar>(config.tolerance))) {
    result.did_not_converge =
        DidNotConverge{iterations, static_cast<double>(residual)};
  }
  return result;
}

/// Frequency scorer over stopword-filtered token lists. With f(w) the corpus
/// count of w and nf(w) = f(w) / max f, sentence i scores
/// sum of nf over its tokens / max(1, token count), normalized to sum to 1.
/// Uniform when every sentence scores 0.
///
/// Throws Error(kEmptySentenceList) for no sentences.
RankScores FrequencyScores(std::span<const TokenList> sentence_tokens);

/// The min(k, n) best indices, ties going to the lower index, returned in
/// ascending (document) order.
template <typename Derived>
std::vector<std::size_t> SelectTopK(const Eigen::DenseBase<Derived>& scores,
                                    std::size_t k) {
  const auto n = static_cast<std::size_t>(scores.size());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores(static_cast<Eigen::Index>(a)) >
           scores(static_cast<Eigen::Index>(b));
  });
  order.resize(std::min(k, n));
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace summarylens

#endif  // SUMMARYLENS_RANKER_H_
