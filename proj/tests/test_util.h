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

#ifndef SUMMARYLENS_TESTS_TEST_UTIL_H_
#define SUMMARYLENS_TESTS_TEST_UTIL_H_

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace summarylens::testing {

inline std::filesystem::path DataPath(const std::string& name) {
  return std::filesystem::path(SUMMARYLENS_DATA_DIR) / name;
}

inline std::filesystem::path GoldenPath(const std::string& name) {
  return std::filesystem::path(SUMMARYLENS_GOLDEN_DIR) / name;
}

inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("summarylens-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

/// Random OCR-like English text: mixed terminators, abbreviations, digits,
/// hard line breaks, words hyphenated across lines and ragged spacing.
inline std::string RandomDocument(std::mt19937_64& rng, int min_sentences = 1,
                                  int max_sentences = 14) {
  static const std::vector<std::string> kWords = {
      "summary", "text", "document", "sentence", "read", "page", "phone",
      "camera", "app", "photo", "scan", "forest", "river", "tree", "rain",
      "bread", "coffee", "breakfast", "morning", "day", "quickly", "time",
      "users", "speech", "voice", "the", "a", "of", "and", "is", "with",
      "zebra", "quantum", "ledger", "ärger", "naïve", "café"};
  static const std::vector<std::string> kOpeners = {
      "Users", "The", "A", "Every", "Rain", "Coffee", "Dr. Lee", "Prof. Kim",
      "Über", "Élan", "2024", "Mr. Smith", "Some"};
  static const std::vector<std::string> kInserts = {"e.g.", "etc.", "vs.",
                                                    "(i.e. this)", "No. 5"};
  static const std::vector<std::string> kTerminators = {".", "!", "?", "?!",
                                                        "..."};
  auto pick = [&](const std::vector<std::string>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  auto chance = [&](double p) {
    return std::bernoulli_distribution(p)(rng);
  };

  const int sentences =
      std::uniform_int_distribution<int>(min_sentences, max_sentences)(rng);
  std::string out;
  if (chance(0.3)) out += "  \n";
  for (int s = 0; s < sentences; ++s) {
    std::string sentence = pick(kOpeners);
    const int words = std::uniform_int_distribution<int>(1, 12)(rng);
    for (int w = 0; w < words; ++w) {
      sentence += " ";
      sentence += chance(0.08) ? pick(kInserts) : pick(kWords);
      if (chance(0.05)) sentence += ",";
    }
    // Unterminated tail on the last sentence sometimes.
    if (s + 1 < sentences || chance(0.8)) sentence += pick(kTerminators);
    out += sentence;
    if (s + 1 < sentences) {
      if (chance(0.2)) {
        out += "\n";
      } else if (chance(0.2)) {
        out += "   ";
      } else {
        out += " ";
      }
    }
  }
  // Hyphenate one long word across a line break.
  if (chance(0.4)) {
    const auto pos = out.find("breakfast");
    if (pos != std::string::npos) out.replace(pos, 9, "break-\n  fast");
  }
  if (chance(0.3)) out += "\n\t ";
  return out;
}

/// Random symmetric nonnegative weight matrix with zero diagonal. Some
/// entries are forced to zero so dangling and disconnected nodes occur.
inline Eigen::MatrixXd RandomGraph(std::mt19937_64& rng, int max_n = 6) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  std::bernoulli_distribution zero(0.3);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = zero(rng) ? 0.0 : weight(rng);
      w(i, j) = v;
      w(j, i) = v;
    }
  }
  return w;
}

/// Stationary vector of the damped walk by a direct dense solve of
/// (I - d P^T) s = (1 - d)/n. Independent of the power iteration.
inline Eigen::VectorXd DirectPageRank(const Eigen::MatrixXd& w, double d) {
  const auto n = w.rows();
  Eigen::MatrixXd p(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double rs = w.row(i).sum();
    for (Eigen::Index j = 0; j < n; ++j) {
      p(i, j) = rs > 0 ? w(i, j) / rs : 1.0 / static_cast<double>(n);
    }
  }
  const Eigen::MatrixXd a =
      Eigen::MatrixXd::Identity(n, n) - d * p.transpose();
  const Eigen::VectorXd b =
      Eigen::VectorXd::Constant(n, (1.0 - d) / static_cast<double>(n));
  return a.fullPivLu().solve(b);
}

}  // namespace summarylens::testing

#endif  // SUMMARYLENS_TESTS_TEST_UTIL_H_
