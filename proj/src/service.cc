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

#include "summarylens/service.h"

#include <charconv>
#include <utility>

#include "httplib.h"
#include "summarylens/ingest.h"
#include "summarylens/serialization.h"

namespace summarylens {
namespace {

using Response = SummaryService::Response;

constexpr const char* kJson = "application/json";

Lexicon LoadLexicon(const ServiceConfig& config) {
  if (!config.abbreviations && !config.stopwords) return Lexicon::Bundled();
  if (!config.abbreviations || !config.stopwords) {
    throw Error(ErrorKind::kInvalidConfig,
                "abbreviations and stopwords must be overridden together");
  }
  return Lexicon::FromFiles(*config.abbreviations, *config.stopwords);
}

Response ErrorResponse(ErrorKind kind, const std::string& message) {
  Json body;
  body["error"] = ErrorKindName(kind);
  body["message"] = message;
  return Response{HttpStatusFor(kind), Canonical(body)};
}

template <typename Fn>
Response Guard(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return ErrorResponse(e.kind(), e.what());
  } catch (const std::exception& e) {
    Json body;
    body["error"] = "internal";
    body["message"] = e.what();
    return Response{500, Canonical(body)};
  }
}

Response Created(const RawDocument& document) {
  Json body;
  body["document_id"] = document.id;
  body["text"] = document.text;
  return Response{201, Canonical(body)};
}

std::optional<std::string> Param(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) return std::nullopt;
  return req.get_param_value(name);
}

void Send(httplib::Response& res, const Response& response) {
  res.status = response.status;
  res.set_content(response.body, kJson);
}

}  // namespace

int HttpStatusFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyDocument:
    case ErrorKind::kEmptyAfterNormalization:
    case ErrorKind::kEmptySentenceList:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kInvalidConfig:
    case ErrorKind::kUnsupportedMethod:
    case ErrorKind::kMalformedLine:
      return 400;
    case ErrorKind::kNotFound:
      return 404;
    case ErrorKind::kDuplicateId:
      return 409;
    case ErrorKind::kProviderUnreachable:
    case ErrorKind::kProviderTimeout:
    case ErrorKind::kProviderBadResponse:
      return 502;
    default:
      return 500;
  }
}

SummaryService::SummaryService(ServiceConfig config)
    : config_((config.Validate(), std::move(config))),
      table_(LoadEmbeddingTableFile(config_.embeddings,
                                    config_.embeddings_max_tokens)),
      lexicon_(LoadLexicon(config_)),
      store_(config_.data_dir),
      server_(std::make_unique<httplib::Server>()) {
  InstallRoutes();
}

SummaryService::~SummaryService() { Stop(); }

SummaryConfig SummaryService::RequestConfig(
    const std::optional<std::string>& k,
    const std::optional<std::string>& method) const {
  SummaryConfig config = config_.summary;
  if (k) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(k->data(), k->data() + k->size(), value);
    if (k->empty() || ec != std::errc() || ptr != k->data() + k->size() ||
        value < 1) {
      throw Error(ErrorKind::kInvalidArgument,
                  "k must be a positive integer, got '" + *k + "'");
    }
    config.k = value;
  }
  if (method) {
    const auto parsed = ParseMethod(*method);
    if (!parsed) {
      throw Error(ErrorKind::kInvalidArgument, "unknown method '" + *method + "'");
    }
    config.method = *parsed;
  }
  return config;
}

Summary SummaryService::SummaryFor(const RawDocument& document,
                                   const SummaryConfig& config) {
  if (auto cached = store_.GetSummary(document.id, config.method, config.k)) {
    return *cached;
  }
  Summary summary = Summarize(document, config, table_, lexicon_);
  store_.SaveSummary(summary);
  return summary;
}

Response SummaryService::HandleScan(std::string_view image) {
  return Guard([&] {
    if (image.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "scan body is empty");
    }
    const std::string text = OcrExtract(config_.ocr, image);
    const auto source = config_.ocr.kind == OcrProviderConfig::Kind::kFixture
                            ? DocumentSource::kFixture
                            : DocumentSource::kOcr;
    const RawDocument document = IngestText(text, source);
    store_.SaveDocument(document);
    return Created(document);
  });
}

Response SummaryService::HandleCreateDocument(std::string_view json_body) {
  return Guard([&] {
    const auto body = Json::parse(json_body, nullptr, false);
    if (body.is_discarded() || !body.is_object() || !body.contains("text") ||
        !body["text"].is_string()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "expected a JSON object with a \"text\" string");
    }
    const RawDocument document =
        IngestText(body["text"].get<std::string>(), DocumentSource::kText);
    store_.SaveDocument(document);
    return Created(document);
  });
}

Response SummaryService::HandleListDocuments() {
  return Guard([&] {
    Json documents = Json::array();
    for (const auto& listing : store_.ListDocuments()) {
      Json entry;
      entry["id"] = listing.id;
      entry["created_at"] = FormatTimestamp(listing.created_at);
      entry["preview"] = listing.preview;
      documents.push_back(std::move(entry));
    }
    Json body;
    body["documents"] = std::move(documents);
    return Response{200, Canonical(body)};
  });
}

Response SummaryService::HandleGetDocument(const std::string& id) {
  return Guard([&] {
    return Response{200, Canonical(ToJson(store_.GetDocument(id)))};
  });
}

Response SummaryService::HandleSummary(const std::string& id,
                                       const std::optional<std::string>& k,
                                       const std::optional<std::string>& method) {
  return Guard([&] {
    const RawDocument document = store_.GetDocument(id);
    const SummaryConfig config = RequestConfig(k, method);
    return Response{200, Canonical(ToJson(SummaryFor(document, config)))};
  });
}

Response SummaryService::HandleHighlights(const std::string& id,
                                          const std::optional<std::string>& k,
                                          const std::optional<std::string>& method) {
  return Guard([&] {
    const RawDocument document = store_.GetDocument(id);
    const SummaryConfig config = RequestConfig(k, method);
    const Summary summary = SummaryFor(document, config);
    return Response{200, Canonical(ToJson(Highlights(document, summary, lexicon_)))};
  });
}

void SummaryService::InstallRoutes() {
  auto& s = *server_;
  s.Post("/api/v1/scan", [this](const httplib::Request& req, httplib::Response& res) {
    Send(res, HandleScan(req.body));
  });
  s.Post("/api/v1/documents",
         [this](const httplib::Request& req, httplib::Response& res) {
           Send(res, HandleCreateDocument(req.body));
         });
  s.Get("/api/v1/documents", [this](const httplib::Request&, httplib::Response& res) {
    Send(res, HandleListDocuments());
  });
  s.Get(R"(/api/v1/documents/([^/]+))",
        [this](const httplib::Request& req, httplib::Response& res) {
          Send(res, HandleGetDocument(req.matches[1]));
        });
  s.Get(R"(/api/v1/documents/([^/]+)/summary)",
        [this](const httplib::Request& req, httplib::Response& res) {
          Send(res, HandleSummary(req.matches[1], Param(req, "k"),
                                  Param(req, "method")));
        });
  s.Get(R"(/api/v1/documents/([^/]+)/highlights)",
        [this](const httplib::Request& req, httplib::Response& res) {
          Send(res, HandleHighlights(req.matches[1], Param(req, "k"),
                                     Param(req, "method")));
        });
  s.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    Json body;
    body["error"] = res.status == 404 ? "not_found" : "http_error";
    body["message"] = "no route for " + req.method + " " + req.path;
    res.set_content(Canonical(body), kJson);
  });
  if (config_.static_dir) s.set_mount_point("/", config_.static_dir->string());
}

int SummaryService::Bind(const std::string& host, int port) {
  const int bound = port == 0 ? server_->bind_to_any_port(host)
                              : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) {
    throw Error(ErrorKind::kIoFailure,
                "cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void SummaryService::Run() { server_->listen_after_bind(); }

void SummaryService::Stop() {
  if (server_) server_->stop();
}

void SummaryService::WaitUntilReady() const { server_->wait_until_ready(); }

}  // namespace summarylens
