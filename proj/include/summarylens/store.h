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

#ifndef SUMMARYLENS_STORE_H_
#define SUMMARYLENS_STORE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "summarylens/document.h"
#include "summarylens/summarizer.h"

namespace summarylens {

struct DocumentListing {
  std::string id;
  Timestamp created_at{};
  std::string preview;  // first 80 characters of the text

  friend bool operator==(const DocumentListing&,
                         const DocumentListing&) = default;
};

/// JSON-file persistence for documents and cached summaries:
///
///   <data_dir>/documents/<id>.json
///   <data_dir>/summaries/<doc_id>.<method>.<k>.json
///
/// The document index is rebuilt from a directory scan on construction.
/// Writes are serialized internally and readers run concurrently; one
/// instance may be shared across threads. Every failure to touch the disk
/// surfaces as Error(kStorageFailure).
class DocumentStore {
 public:
  explicit DocumentStore(std::filesystem::path data_dir);

  DocumentStore(const DocumentStore&) = delete;
  DocumentStore& operator=(const DocumentStore&) = delete;

  const std::filesystem::path& data_dir() const { return data_dir_; }

  /// Throws Error(kDuplicateId) if the id is taken and Error(kInvalidArgument)
  /// for an id unusable as a file name or an empty text.
  std::string SaveDocument(const RawDocument& document);

  /// Throws Error(kNotFound).
  RawDocument GetDocument(const std::string& id) const;

  bool HasDocument(const std::string& id) const;

  /// Newest first; equal timestamps ordered by id.
  std::vector<DocumentListing> ListDocuments() const;

  /// Replaces any summary cached under the same (document, method, k).
  /// Throws Error(kNotFound) if the document is unknown.
  void SaveSummary(const Summary& summary);

  std::optional<Summary> GetSummary(const std::string& document_id,
                                    SummaryMethod method, std::size_t k) const;

 private:
  std::filesystem::path DocumentPath(const std::string& id) const;
  std::filesystem::path SummaryPath(const std::string& document_id,
                                    SummaryMethod method, std::size_t k) const;
  std::optional<RawDocument> LoadFromDisk(const std::string& id) const;

  std::filesystem::path data_dir_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::string, RawDocument> documents_;
};

}  // namespace summarylens

#endif  // SUMMARYLENS_STORE_H_
