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

#ifndef SUMMARYLENS_SERVICE_H_
#define SUMMARYLENS_SERVICE_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "summarylens/config.h"
#include "summarylens/embeddings.h"
#include "summarylens/error.h"
#include "summarylens/segmenter.h"
#include "summarylens/store.h"
#include "summarylens/summarizer.h"

namespace httplib {
class Server;
}

namespace summarylens {

/// HTTP status for an engine error: bad input 400, unknown id 404, OCR
/// provider failures 502, everything else 500.
int HttpStatusFor(ErrorKind kind);

/// The summarization service. Routes:
///
///   POST /api/v1/scan                        image bytes -> {document_id, text}
///   POST /api/v1/documents                   {"text": ...} -> {document_id, text}
///   GET  /api/v1/documents                   {"documents": [{id, created_at, preview}]}
///   GET  /api/v1/documents/{id}              RawDocument
///   GET  /api/v1/documents/{id}/summary      ?k=&method= -> Summary
///   GET  /api/v1/documents/{id}/highlights   ?k=&method= -> HighlightedDocument
///
/// Errors come back as {"error": <kind>, "message": ...}. Summaries are
/// cached in the store per (document, method, k). The Handle* methods are
/// the transport-free core and are safe to call concurrently.
class SummaryService {
 public:
  struct Response {
    int status = 200;
    std::string body;
  };

  /// Loads the embedding table and word lists and opens the store.
  /// Throws Error(kInvalidConfig) if `config` fails validation.
  explicit SummaryService(ServiceConfig config);
  ~SummaryService();

  SummaryService(const SummaryService&) = delete;
  SummaryService& operator=(const SummaryService&) = delete;

  Response HandleScan(std::string_view image);
  Response HandleCreateDocument(std::string_view json_body);
  Response HandleListDocuments();
  Response HandleGetDocument(const std::string& id);
  Response HandleSummary(const std::string& id,
                         const std::optional<std::string>& k,
                         const std::optional<std::string>& method);
  Response HandleHighlights(const std::string& id,
                            const std::optional<std::string>& k,
                            const std::optional<std::string>& method);

  /// Binds the listening socket; port 0 picks a free port. Returns the bound
  /// port. Throws Error(kIoFailure) when binding fails.
  int Bind(const std::string& host, int port);
  /// Serves until Stop(). Call Bind first.
  void Run();
  void Stop();
  void WaitUntilReady() const;

  const ServiceConfig& config() const { return config_; }
  DocumentStore& store() { return store_; }

 private:
  Summary SummaryFor(const RawDocument& document, const SummaryConfig& config);
  SummaryConfig RequestConfig(const std::optional<std::string>& k,
                              const std::optional<std::string>& method) const;
  void InstallRoutes();

  ServiceConfig config_;
  EmbeddingTable table_;
  Lexicon lexicon_;
  DocumentStore store_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace summarylens

#endif  // SUMMARYLENS_SERVICE_H_
