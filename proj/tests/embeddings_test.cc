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

#include "summarylens/embeddings.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "test_util.h"

namespace summarylens {
namespace {

EmbeddingTable TableFrom(const std::string& text) {
  std::istringstream in(text);
  return LoadEmbeddingTable(in);
}

template <typename Fn>
ErrorKind KindOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kInvalidArgument;
}

TEST(LoadEmbeddingTableTest, Examples) {
  const auto table = TableFrom("cat 1.0 0.0\ndog 0.0 1.0\n");
  EXPECT_EQ(table.dim(), 2);
  EXPECT_EQ(table.size(), 2u);
  EXPECT_EQ(table.lookup("dog")->transpose(), Eigen::Vector2d(0.0, 1.0));

  try {
    TableFrom("cat 1.0 0.0\ndog 1.0\n");
    FAIL() << "expected MalformedLine";
  } catch (const MalformedLineError& e) {
    EXPECT_EQ(e.line_number(), 2u);
  }
  EXPECT_EQ(KindOf([] { TableFrom(""); }), ErrorKind::kEmptySource);
}

TEST(LoadEmbeddingTableTest, DuplicatesKeepFirstOccurrence) {
  const auto table = TableFrom("cat 1 0\ncat 5 5\ndog 0 1\n");
  EXPECT_EQ(table.size(), 2u);
  EXPECT_EQ(table.lookup("cat")->transpose(), Eigen::Vector2d(1.0, 0.0));
}

TEST(LoadEmbeddingTableTest, RejectsBadOrNonFiniteFloats) {
  for (const char* text : {"cat 1.0 x\n", "cat 1.0 nan\n", "cat inf 1\n",
                           "a 1 2\nb 1 2e\n", "lonely\n"}) {
    EXPECT_EQ(KindOf([&] { TableFrom(text); }), ErrorKind::kMalformedLine) << text;
  }
}

TEST(LoadEmbeddingTableTest, AcceptsCrlfAndSignedExponents) {
  const auto table = TableFrom("cat +1.5e-1 -2E+0\r\n");
  EXPECT_DOUBLE_EQ((*table.lookup("cat"))(0), 0.15);
  EXPECT_DOUBLE_EQ((*table.lookup("cat"))(1), -2.0);
}

TEST(LoadEmbeddingTableTest, VocabularyCap) {
  std::istringstream in("a 1 0\nb 0 1\nc 1 1\nd broken\n");
  const auto table = LoadEmbeddingTable(in, 2);
  EXPECT_EQ(table.size(), 2u);
  EXPECT_FALSE(table.contains("c"));
}

TEST(LoadEmbeddingTableTest, FloatTables) {
  std::istringstream in("cat 0.5 0.25\n");
  const auto table = LoadEmbeddingTable<float>(in);
  EXPECT_FLOAT_EQ((*table.lookup("cat"))(1), 0.25f);
}

TEST(LoadEmbeddingTableTest, BundledMiniTable) {
  const auto table = LoadEmbeddingTableFile(testing::DataPath("mini_glove.txt"));
  EXPECT_EQ(table.dim(), 5);
  EXPECT_EQ(table.size(), 25u);
  EXPECT_EQ(KindOf([] { LoadEmbeddingTableFile("/nonexistent/glove.txt"); }),
            ErrorKind::kIoFailure);
}

TEST(SentenceVectorTest, Examples) {
  const auto table = TableFrom("cat 1 0\ndog 0 1\n");
  EXPECT_EQ(MeanSentenceVector(table, {"cat", "dog"}), Eigen::Vector2d(0.5, 0.5));
  EXPECT_EQ(MeanSentenceVector(table, {"zzz", "yyy"}), Eigen::Vector2d(0, 0));
  EXPECT_EQ(MeanSentenceVector(table, {"cat", "zzz"}), Eigen::Vector2d(1, 0));
  EXPECT_EQ(MeanSentenceVector(table, {}), Eigen::Vector2d(0, 0));
}

TEST(SentenceVectorTest, PermutationInvariant) {
  const auto table = LoadEmbeddingTableFile(testing::DataPath("mini_glove.txt"));
  TokenList tokens = {"summary", "river", "coffee", "zzz", "summary", "voice", "time"};
  const SentenceVector reference = MeanSentenceVector(table, tokens);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    std::shuffle(tokens.begin(), tokens.end(), rng);
    EXPECT_TRUE(MeanSentenceVector(table, tokens).isApprox(reference, 1e-14));
  }
}

TEST(CosineSimilarityTest, Examples) {
  EXPECT_DOUBLE_EQ(CosineSimilarity(Eigen::Vector3d(1, 2, 2), Eigen::Vector3d(1, 2, 2)), 1.0);
  EXPECT_DOUBLE_EQ(CosineSimilarity(Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1)), 0.0);
  EXPECT_DOUBLE_EQ(CosineSimilarity(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 1)), 0.0);
}

TEST(CosineSimilarityTest, HandComputedValue) {
  // dot = 4 + 10 + 18 = 32, |a|^2 = 14, |b|^2 = 77.
  const double expected = 32.0 / (std::sqrt(14.0) * std::sqrt(77.0));
  EXPECT_NEAR(expected, 0.9746318461970762, 1e-15);
  EXPECT_NEAR(CosineSimilarity(Eigen::Vector3d(1, 2, 3), Eigen::Vector3d(4, 5, 6)),
              0.9746318461970762, 1e-15);
}

TEST(CosineSimilarityTest, DimensionMismatch) {
  EXPECT_EQ(KindOf([] {
              const Eigen::VectorXd a = Eigen::Vector2d(1, 0);
              const Eigen::VectorXd b = Eigen::Vector3d(1, 0, 0);
              CosineSimilarity(a, b);
            }),
            ErrorKind::kDimensionMismatch);
}

TEST(CosineSimilarityTest, SymmetricScaleInvariantAndBounded) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> normal(0.0, 3.0);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int trial = 0; trial < 1000; ++trial) {
    const int dim = 1 + trial % 8;
    Eigen::VectorXd a(dim), b(dim);
    for (int i = 0; i < dim; ++i) {
      a(i) = normal(rng);
      b(i) = normal(rng);
    }
    const double ab = CosineSimilarity(a, b);
    EXPECT_EQ(ab, CosineSimilarity(b, a));
    EXPECT_LE(std::abs(ab), 1.0 + 1e-12);
    const double c = scale(rng);
    EXPECT_NEAR(CosineSimilarity((c * a).eval(), b), ab, 1e-12);
  }
}

}  // namespace
}  // namespace summarylens
