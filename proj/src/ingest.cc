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

#include "summarylens/ingest.h"

#include "httplib.h"
#include "json.hpp"
#include "summarylens/error.h"
#include "summarylens/segmenter.h"

namespace summarylens {
namespace {

struct Endpoint {
  std::string origin;  // scheme://host:port
  std::string path;
};

Endpoint ParseEndpoint(const std::string& url) {
  constexpr std::string_view kScheme = "http://";
  if (url.rfind(kScheme, 0) != 0) {
    throw Error(ErrorKind::kInvalidConfig,
                "OCR endpoint must be an http:// URL: " + url);
  }
  const auto slash = url.find('/', kScheme.size());
  Endpoint endpoint;
  endpoint.origin = url.substr(0, slash);
  endpoint.path = slash == std::string::npos ? "/" : url.substr(slash);
  if (endpoint.origin.size() == kScheme.size()) {
    throw Error(ErrorKind::kInvalidConfig, "OCR endpoint has no host: " + url);
  }
  return endpoint;
}

std::string ExtractExternal(const OcrProviderConfig& provider,
                            std::string_view image) {
  const Endpoint endpoint = ParseEndpoint(*provider.endpoint_url);
  httplib::Client client(endpoint.origin);
  const auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(
      provider.timeout);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);

  const auto started = std::chrono::steady_clock::now();
  auto result = client.Post(endpoint.path, image.data(), image.size(),
                            "application/octet-stream");
  if (!result) {
    const auto error = result.error();
    const bool timed_out =
        error == httplib::Error::ConnectionTimeout ||
        (error == httplib::Error::Read &&
         std::chrono::steady_clock::now() - started >= provider.timeout);
    if (timed_out) {
      throw Error(ErrorKind::kProviderTimeout,
                  "OCR provider timed out: " + *provider.endpoint_url);
    }
    throw Error(ErrorKind::kProviderUnreachable,
                "OCR provider unreachable (" + httplib::to_string(error) +
                    "): " + *provider.endpoint_url);
  }
  if (result->status != 200) {
    throw ProviderBadResponseError(result->status, "expected 200");
  }
  const auto body = nlohmann::json::parse(result->body, nullptr, false);
  if (body.is_discarded() || !body.is_object() || !body.contains("text") ||
      !body["text"].is_string()) {
    throw ProviderBadResponseError(result->status,
                                   "expected a JSON object with a \"text\" string");
  }
  return body["text"].get<std::string>();
}

}  // namespace

void OcrProviderConfig::Validate() const {
  if (timeout <= std::chrono::milliseconds::zero()) {
    throw Error(ErrorKind::kInvalidConfig, "OCR timeout must be positive");
  }
  if (kind == Kind::kFixture) {
    if (!fixture_text) {
      throw Error(ErrorKind::kMissingFixtureText,
                  "fixture OCR provider has no fixture text");
    }
    if (endpoint_url) {
      throw Error(ErrorKind::kInvalidConfig,
                  "fixture OCR provider must not set an endpoint");
    }
    return;
  }
  if (!endpoint_url) {
    throw Error(ErrorKind::kInvalidConfig, "external OCR provider needs an endpoint");
  }
  if (fixture_text) {
    throw Error(ErrorKind::kInvalidConfig,
                "external OCR provider must not set fixture text");
  }
  ParseEndpoint(*endpoint_url);
}

std::string OcrExtract(const OcrProviderConfig& provider, std::string_view image) {
  provider.Validate();
  if (provider.kind == OcrProviderConfig::Kind::kFixture) {
    return *provider.fixture_text;
  }
  if (image.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "image is empty");
  }
  return ExtractExternal(provider, image);
}

RawDocument IngestText(std::string_view raw, DocumentSource source) {
  return IngestText(raw, source, GenerateDocumentId(), Now());
}

RawDocument IngestText(std::string_view raw, DocumentSource source,
                       std::string id, Timestamp created_at) {
  std::string text = NormalizeText(raw);
  if (text.empty()) {
    throw Error(ErrorKind::kEmptyAfterNormalization,
                "document is empty after normalization");
  }
  return RawDocument{std::move(id), source, std::move(text), created_at};
}

}  // namespace summarylens
