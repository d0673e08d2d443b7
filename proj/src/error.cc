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

#include "summarylens/error.h"

namespace summarylens {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedLine: return "malformed_line";
    case ErrorKind::kEmptySource: return "empty_source";
    case ErrorKind::kDimensionMismatch: return "dimension_mismatch";
    case ErrorKind::kEmptyGraph: return "empty_graph";
    case ErrorKind::kEmptySentenceList: return "empty_sentence_list";
    case ErrorKind::kEmptyDocument: return "empty_document";
    case ErrorKind::kDocumentMismatch: return "document_mismatch";
    case ErrorKind::kUnsupportedMethod: return "unsupported_method";
    case ErrorKind::kInvalidConfig: return "invalid_config";
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kDuplicateId: return "duplicate_id";
    case ErrorKind::kNotFound: return "not_found";
    case ErrorKind::kStorageFailure: return "storage_failure";
    case ErrorKind::kIoFailure: return "io_failure";
    case ErrorKind::kProviderUnreachable: return "provider_unreachable";
    case ErrorKind::kProviderTimeout: return "provider_timeout";
    case ErrorKind::kProviderBadResponse: return "provider_bad_response";
    case ErrorKind::kMissingFixtureText: return "missing_fixture_text";
    case ErrorKind::kEmptyAfterNormalization:
      return "empty_after_normalization";
  }
  return "unknown";
}

MalformedLineError::MalformedLineError(std::size_t line_number,
                                       const std::string& reason)
    : Error(ErrorKind::kMalformedLine,
            "malformed line " + std::to_string(line_number) + ": " + reason),
      line_number_(line_number) {}

ProviderBadResponseError::ProviderBadResponseError(int status,
                                                   const std::string& reason)
    : Error(ErrorKind::kProviderBadResponse,
            "OCR provider returned status " + std::to_string(status) + ": " +
                reason),
      status_(status) {}

}  // namespace summarylens
