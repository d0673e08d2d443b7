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

#include "summarylens/store.h"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <system_error>

#include "summarylens/error.h"
#include "summarylens/serialization.h"
#include "summarylens/unicode.h"

namespace summarylens {
namespace fs = std::filesystem;
namespace {

constexpr std::size_t kPreviewLength = 80;

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorKind::kStorageFailure, what);
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail("cannot open " + path.string());
  std::ostringstream contents;
  contents << in.rdbuf();
  if (in.bad()) Fail("cannot read " + path.string());
  return contents.str();
}

// Write to a sibling temp file, then rename over the target.
void WriteFileAtomically(const fs::path& path, const std::string& contents) {
  fs::path tmp = path;
  tmp += ".tmp-" + GenerateDocumentId();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) Fail("cannot create " + tmp.string());
    out << contents;
    out.flush();
    if (!out) Fail("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    Fail("cannot move " + tmp.string() + " into place");
  }
}

RawDocument ParseDocumentFile(const fs::path& path) {
  try {
    return RawDocumentFromJson(Json::parse(ReadFile(path)));
  } catch (const nlohmann::json::exception& e) {
    Fail("corrupt document " + path.string() + ": " + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kStorageFailure) throw;
    Fail("corrupt document " + path.string() + ": " + e.what());
  }
}

}  // namespace

DocumentStore::DocumentStore(fs::path data_dir) : data_dir_(std::move(data_dir)) {
  std::error_code ec;
  fs::create_directories(data_dir_ / "documents", ec);
  if (ec) Fail("cannot create " + (data_dir_ / "documents").string());
  fs::create_directories(data_dir_ / "summaries", ec);
  if (ec) Fail("cannot create " + (data_dir_ / "summaries").string());

  for (const auto& entry : fs::directory_iterator(data_dir_ / "documents", ec)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    RawDocument doc = ParseDocumentFile(entry.path());
    if (doc.id != entry.path().stem().string()) {
      Fail("document file " + entry.path().string() + " holds id " + doc.id);
    }
    documents_.emplace(doc.id, std::move(doc));
  }
  if (ec) Fail("cannot scan " + (data_dir_ / "documents").string());
}

fs::path DocumentStore::DocumentPath(const std::string& id) const {
  return data_dir_ / "documents" / (id + ".json");
}

fs::path DocumentStore::SummaryPath(const std::string& document_id,
                                    SummaryMethod method, std::size_t k) const {
  return data_dir_ / "summaries" /
         (document_id + "." + std::string(MethodName(method)) + "." +
          std::to_string(k) + ".json");
}

std::optional<RawDocument> DocumentStore::LoadFromDisk(
    const std::string& id) const {
  if (!IsValidDocumentId(id)) return std::nullopt;
  const fs::path path = DocumentPath(id);
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) return std::nullopt;
  return ParseDocumentFile(path);
}

std::string DocumentStore::SaveDocument(const RawDocument& document) {
  if (!IsValidDocumentId(document.id)) {
    throw Error(ErrorKind::kInvalidArgument,
                "invalid document id '" + document.id + "'");
  }
  if (document.text.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "document text is empty");
  }
  std::unique_lock lock(mutex_);
  std::error_code ec;
  if (documents_.count(document.id) > 0 ||
      fs::exists(DocumentPath(document.id), ec)) {
    throw Error(ErrorKind::kDuplicateId,
                "document '" + document.id + "' already exists");
  }
  WriteFileAtomically(DocumentPath(document.id), Canonical(ToJson(document)));
  documents_.emplace(document.id, document);
  return document.id;
}

RawDocument DocumentStore::GetDocument(const std::string& id) const {
  {
    std::shared_lock lock(mutex_);
    const auto it = documents_.find(id);
    if (it != documents_.end()) return it->second;
  }
  // Another process sharing the data directory may have added it.
  std::unique_lock lock(mutex_);
  if (auto doc = LoadFromDisk(id)) {
    documents_.emplace(id, *doc);
    return *doc;
  }
  throw Error(ErrorKind::kNotFound, "no document '" + id + "'");
}

bool DocumentStore::HasDocument(const std::string& id) const {
  try {
    GetDocument(id);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kNotFound) return false;
    throw;
  }
}

std::vector<DocumentListing> DocumentStore::ListDocuments() const {
  std::vector<DocumentListing> listing;
  {
    std::shared_lock lock(mutex_);
    listing.reserve(documents_.size());
    for (const auto& [id, doc] : documents_) {
      listing.push_back(
          DocumentListing{id, doc.created_at, SliceCodePoints(doc.text, 0, kPreviewLength)});
    }
  }
  std::sort(listing.begin(), listing.end(),
            [](const DocumentListing& a, const DocumentListing& b) {
              if (a.created_at != b.created_at) return a.created_at > b.created_at;
              return a.id < b.id;
            });
  return listing;
}

void DocumentStore::SaveSummary(const Summary& summary) {
  if (!HasDocument(summary.document_id)) {
    throw Error(ErrorKind::kNotFound,
                "no document '" + summary.document_id + "' for summary");
  }
  std::unique_lock lock(mutex_);
  WriteFileAtomically(
      SummaryPath(summary.document_id, summary.config.method, summary.config.k),
      Canonical(ToJson(summary)));
}

std::optional<Summary> DocumentStore::GetSummary(const std::string& document_id,
                                                 SummaryMethod method,
                                                 std::size_t k) const {
  if (!IsValidDocumentId(document_id)) return std::nullopt;
  std::shared_lock lock(mutex_);
  const fs::path path = SummaryPath(document_id, method, k);
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) return std::nullopt;
  try {
    Summary summary = SummaryFromJson(Json::parse(ReadFile(path)));
    if (summary.document_id != document_id || summary.config.method != method ||
        summary.config.k != k) {
      Fail("summary file " + path.string() + " does not match its name");
    }
    return summary;
  } catch (const nlohmann::json::exception& e) {
    Fail("corrupt summary " + path.string() + ": " + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kStorageFailure) throw;
    Fail("corrupt summary " + path.string() + ": " + e.what());
  }
}

}  // namespace summarylens
