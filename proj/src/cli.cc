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

#include "summarylens/cli.h"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "summarylens/ingest.h"
#include "summarylens/serialization.h"
#include "summarylens/service.h"
#include "summarylens/store.h"
#include "summarylens/summarizer.h"
#include "summarylens/unicode.h"

namespace summarylens {
namespace fs = std::filesystem;
namespace {

struct CommonOptions {
  std::optional<std::string> config;
  std::optional<std::string> data_dir;
  std::optional<std::string> embeddings;
};

struct SummarizeOptions {
  std::string input = "-";
  std::optional<std::size_t> k;
  std::optional<std::string> method;
  std::string format = "json";
  std::optional<std::string> id;
  std::string open_marker = ">>";
  std::string close_marker = "<<";
};

struct ServeOptions {
  std::optional<std::string> bind;
  std::optional<int> port;
};

ServiceConfig ResolveConfig(const CommonOptions& common, const EnvLookup& env) {
  std::optional<fs::path> file;
  if (common.config) file = *common.config;
  ServiceConfig config = LoadServiceConfig(file, env);
  if (common.data_dir) config.data_dir = *common.data_dir;
  if (common.embeddings) config.embeddings = *common.embeddings;
  return config;
}

Lexicon ResolveLexicon(const ServiceConfig& config) {
  if (config.abbreviations && config.stopwords) {
    return Lexicon::FromFiles(*config.abbreviations, *config.stopwords);
  }
  if (config.abbreviations || config.stopwords) {
    throw Error(ErrorKind::kInvalidConfig,
                "abbreviations and stopwords must be overridden together");
  }
  return Lexicon::Bundled();
}

std::string ReadInput(const std::string& input, std::istream& in) {
  std::ostringstream text;
  if (input == "-") {
    text << in.rdbuf();
    return text.str();
  }
  std::ifstream file(input, std::ios::binary);
  if (!file) throw Error(ErrorKind::kIoFailure, "cannot read " + input);
  text << file.rdbuf();
  if (file.bad()) throw Error(ErrorKind::kIoFailure, "cannot read " + input);
  return text.str();
}

std::string DefaultId(const std::string& input) {
  if (input == "-") return "stdin";
  std::string stem = fs::path(input).stem().string();
  return IsValidDocumentId(stem) ? stem : "document";
}

void WriteHighlighted(std::ostream& out, const HighlightedDocument& doc,
                      const SummarizeOptions& options) {
  const std::u32string text = DecodeUtf8(doc.text);
  std::size_t pos = 0;
  for (const auto& span : doc.highlight_spans) {
    out << EncodeUtf8(std::u32string_view(text).substr(pos, span.start - pos))
        << options.open_marker
        << EncodeUtf8(std::u32string_view(text).substr(span.start, span.length()))
        << options.close_marker;
    pos = span.end;
  }
  out << EncodeUtf8(std::u32string_view(text).substr(pos)) << "\n";
}

int RunSummarize(const CommonOptions& common, const SummarizeOptions& options,
                 std::istream& in, std::ostream& out, const EnvLookup& env) {
  ServiceConfig config = ResolveConfig(common, env);
  SummaryConfig summary_config = config.summary;
  if (options.k) summary_config.k = *options.k;
  if (options.method) summary_config.method = *ParseMethod(*options.method);
  summary_config.Validate();
  const Lexicon lexicon = ResolveLexicon(config);

  const std::string raw = ReadInput(options.input, in);
  const std::string id = options.id.value_or(DefaultId(options.input));
  if (!IsValidDocumentId(id)) {
    throw Error(ErrorKind::kInvalidConfig, "invalid document id '" + id + "'");
  }
  RawDocument document;
  try {
    document = IngestText(raw, DocumentSource::kText, id, Now());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kEmptyAfterNormalization) throw;
    throw Error(ErrorKind::kEmptyDocument, "empty document");
  }

  Summary summary;
  if (summary_config.method == SummaryMethod::kTextRank) {
    if (config.embeddings.empty()) {
      throw Error(ErrorKind::kInvalidConfig,
                  "the textrank method needs --embeddings (or "
                  "SUMMARYLENS_EMBEDDINGS)");
    }
    const EmbeddingTable table =
        LoadEmbeddingTableFile(config.embeddings, config.embeddings_max_tokens);
    summary = Summarize(document, summary_config, table, lexicon);
  } else {
    summary = SummarizeByFrequency(document, summary_config.k, lexicon);
  }

  if (common.data_dir) {
    DocumentStore store(config.data_dir);
    if (!store.HasDocument(document.id)) {
      store.SaveDocument(document);
    } else if (store.GetDocument(document.id).text != document.text) {
      throw Error(ErrorKind::kDuplicateId,
                  "document '" + document.id + "' exists with different text");
    }
    store.SaveSummary(summary);
  }

  if (options.format == "json") {
    out << Canonical(ToJson(summary));
  } else if (options.format == "text") {
    for (const auto& sentence : summary.sentences) out << sentence << "\n";
  } else {
    WriteHighlighted(out, Highlights(document, summary, lexicon), options);
  }
  out.flush();
  if (!out) throw Error(ErrorKind::kIoFailure, "cannot write output");
  return kExitOk;
}

int RunServe(const CommonOptions& common, const ServeOptions& options,
             std::ostream& out, const EnvLookup& env) {
  ServiceConfig config = ResolveConfig(common, env);
  if (options.bind) config.bind_address = *options.bind;
  if (options.port) config.port = *options.port;
  SummaryService service(config);
  const int port = service.Bind(config.bind_address, config.port);
  out << "listening on http://" << config.bind_address << ":" << port << std::endl;
  service.Run();
  return kExitOk;
}

int RunDocsList(const CommonOptions& common, std::ostream& out,
                const EnvLookup& env) {
  const DocumentStore store(ResolveConfig(common, env).data_dir);
  for (const auto& listing : store.ListDocuments()) {
    out << listing.id << "\t" << FormatTimestamp(listing.created_at) << "\t"
        << listing.preview << "\n";
  }
  return kExitOk;
}

int RunDocsShow(const CommonOptions& common, const std::string& id,
                std::ostream& out, const EnvLookup& env) {
  const DocumentStore store(ResolveConfig(common, env).data_dir);
  out << Canonical(ToJson(store.GetDocument(id)));
  return kExitOk;
}

void AddCommon(CLI::App& app, CommonOptions& common) {
  app.add_option("--config", common.config, "Key-value configuration file");
  app.add_option("--data-dir", common.data_dir, "Document store directory");
}

}  // namespace

ExitCode ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidConfig:
    case ErrorKind::kInvalidArgument:
      return kExitUsage;
    case ErrorKind::kIoFailure:
    case ErrorKind::kStorageFailure:
      return kExitIo;
    default:
      return kExitEngine;
  }
}

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err, const EnvLookup& env) {
  CLI::App app{"Extractive summarization engine and service", "summarylens"};
  app.require_subcommand(1);

  CommonOptions common;
  SummarizeOptions summarize;
  ServeOptions serve;
  std::string show_id;

  auto* summarize_cmd = app.add_subcommand("summarize", "Summarize a file or stdin");
  AddCommon(*summarize_cmd, common);
  summarize_cmd->add_option("input", summarize.input, "Text file, or - for stdin");
  summarize_cmd->add_option("--k", summarize.k, "Number of sentences")
      ->check(CLI::PositiveNumber);
  summarize_cmd->add_option("--method", summarize.method, "Ranking method")
      ->check(CLI::IsMember({"textrank", "frequency"}));
  summarize_cmd->add_option("--format", summarize.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "highlight"}));
  summarize_cmd->add_option("--embeddings", common.embeddings,
                            "GloVe text-format embedding table");
  summarize_cmd->add_option("--id", summarize.id,
                            "Document id (default: file stem, or 'stdin')");
  summarize_cmd->add_option("--open-marker", summarize.open_marker,
                            "Highlight opening marker");
  summarize_cmd->add_option("--close-marker", summarize.close_marker,
                            "Highlight closing marker");

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  AddCommon(*serve_cmd, common);
  serve_cmd->add_option("--embeddings", common.embeddings,
                        "GloVe text-format embedding table");
  serve_cmd->add_option("--bind", serve.bind, "Listen address");
  serve_cmd->add_option("--port", serve.port, "Listen port")
      ->check(CLI::Range(1, 65535));

  auto* docs_cmd = app.add_subcommand("docs", "Inspect the document store");
  docs_cmd->require_subcommand(1);
  auto* list_cmd = docs_cmd->add_subcommand("list", "List stored documents");
  AddCommon(*list_cmd, common);
  auto* show_cmd = docs_cmd->add_subcommand("show", "Print a stored document");
  AddCommon(*show_cmd, common);
  show_cmd->add_option("id", show_id, "Document id")->required();

  std::vector<const char*> argv{"summarylens"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (summarize_cmd->parsed()) {
      return RunSummarize(common, summarize, in, out, env);
    }
    if (serve_cmd->parsed()) return RunServe(common, serve, out, env);
    if (list_cmd->parsed()) return RunDocsList(common, out, env);
    return RunDocsShow(common, show_id, out, env);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitEngine;
  }
}

}  // namespace summarylens
