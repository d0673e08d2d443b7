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

#include "summarylens/serialization.h"

#include "summarylens/error.h"

namespace summarylens {
namespace {

const Json& Field(const Json& json, const char* name) {
  if (!json.is_object() || !json.contains(name)) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string("missing field '") + name + "'");
  }
  return json.at(name);
}

template <typename T>
T Get(const Json& json, const char* name) {
  try {
    return Field(json, name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace

Json ToJson(const Summary& summary) {
  Json json;
  json["document_id"] = summary.document_id;
  json["method"] = MethodName(summary.config.method);
  json["k"] = summary.config.k;
  json["selected"] = summary.selected;
  json["sentences"] = summary.sentences;
  json["scores"] = summary.scores;
  json["converged"] = summary.converged;
  return json;
}

Json ToJson(const HighlightedDocument& highlighted) {
  Json spans = Json::array();
  for (const auto& span : highlighted.highlight_spans) {
    spans.push_back(Json::array({span.start, span.end}));
  }
  Json json;
  json["text"] = highlighted.text;
  json["highlight_spans"] = std::move(spans);
  return json;
}

Json ToJson(const RawDocument& document) {
  Json json;
  json["id"] = document.id;
  json["source"] = SourceName(document.source);
  json["text"] = document.text;
  json["created_at"] = FormatTimestamp(document.created_at);
  return json;
}

Summary SummaryFromJson(const Json& json) {
  Summary summary;
  summary.document_id = Get<std::string>(json, "document_id");
  const auto method = ParseMethod(Get<std::string>(json, "method"));
  if (!method) throw Error(ErrorKind::kInvalidArgument, "unknown method");
  summary.config.method = *method;
  summary.config.k = Get<std::size_t>(json, "k");
  summary.selected = Get<std::vector<std::size_t>>(json, "selected");
  summary.sentences = Get<std::vector<std::string>>(json, "sentences");
  summary.scores = Get<std::vector<double>>(json, "scores");
  summary.converged = Get<bool>(json, "converged");
  return summary;
}

HighlightedDocument HighlightedDocumentFromJson(const Json& json) {
  HighlightedDocument out;
  out.text = Get<std::string>(json, "text");
  for (const auto& pair :
       Get<std::vector<std::vector<std::size_t>>>(json, "highlight_spans")) {
    if (pair.size() != 2) {
      throw Error(ErrorKind::kInvalidArgument, "span must be [start, end]");
    }
    out.highlight_spans.push_back(Span{pair[0], pair[1]});
  }
  return out;
}

RawDocument RawDocumentFromJson(const Json& json) {
  RawDocument document;
  document.id = Get<std::string>(json, "id");
  const auto source = ParseSource(Get<std::string>(json, "source"));
  if (!source) throw Error(ErrorKind::kInvalidArgument, "unknown source");
  document.source = *source;
  document.text = Get<std::string>(json, "text");
  const auto created = ParseTimestamp(Get<std::string>(json, "created_at"));
  if (!created) throw Error(ErrorKind::kInvalidArgument, "bad created_at");
  document.created_at = *created;
  return document;
}

std::string Canonical(const Json& json) { return json.dump() + "\n"; }

}  // namespace summarylens
