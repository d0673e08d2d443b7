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

#ifndef SUMMARYLENS_ERROR_H_
#define SUMMARYLENS_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace summarylens {

enum class ErrorKind {
  kMalformedLine,
  kEmptySource,
  kDimensionMismatch,
  kEmptyGraph,
  kEmptySentenceList,
  kEmptyDocument,
  kDocumentMismatch,
  kUnsupportedMethod,
  kInvalidConfig,
  kInvalidArgument,
  kDuplicateId,
  kNotFound,
  kStorageFailure,
  kIoFailure,
  kProviderUnreachable,
  kProviderTimeout,
  kProviderBadResponse,
  kMissingFixtureText,
  kEmptyAfterNormalization,
};

/// Stable snake_case name, used in service error bodies.
std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class MalformedLineError : public Error {
 public:
  MalformedLineError(std::size_t line_number, const std::string& reason);

  /// 1-based.
  std::size_t line_number() const noexcept { return line_number_; }

 private:
  std::size_t line_number_;
};

class ProviderBadResponseError : public Error {
 public:
  ProviderBadResponseError(int status, const std::string& reason);

  int status() const noexcept { return status_; }

 private:
  int status_;
};

}  // namespace summarylens

#endif  // SUMMARYLENS_ERROR_H_
