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

#include <gtest/gtest.h>

#include <fstream>
#include <thread>

#include "httplib.h"
#include "stub_server.h"
#include "summarylens/ingest.h"
#include "summarylens/serialization.h"
#include "summarylens/unicode.h"
#include "test_util.h"

namespace summarylens {
namespace {

using namespace std::chrono_literals;

ServiceConfig BaseConfig(const std::filesystem::path& data_dir) {
  ServiceConfig config;
  config.data_dir = data_dir;
  config.embeddings = testing::DataPath("mini_glove.txt");
  config.ocr.kind = OcrProviderConfig::Kind::kFixture;
  config.ocr.fixture_text = testing::ReadFile(testing::DataPath("fixture_document.txt"));
  return config;
}

RawDocument FixtureDocument() {
  return IngestText(testing::ReadFile(testing::DataPath("fixture_document.txt")),
                    DocumentSource::kFixture, "fixture_document", Now());
}

Json Body(const SummaryService::Response& r) { return Json::parse(r.body); }

class ServiceTest : public ::testing::Test {
 protected:
  testing::TempDir dir_;
  SummaryService service_{BaseConfig(dir_.path())};
};

TEST_F(ServiceTest, ScanInFixtureModeStoresFixtureText) {
  const auto r = service_.HandleScan("arbitrary image bytes");
  ASSERT_EQ(r.status, 201) << r.body;
  const auto id = Body(r)["document_id"].get<std::string>();
  EXPECT_EQ(Body(r)["text"], FixtureDocument().text);
  const auto doc = Body(service_.HandleGetDocument(id));
  EXPECT_EQ(doc["source"], "fixture");
  EXPECT_EQ(doc["text"], FixtureDocument().text);
}

TEST_F(ServiceTest, ScanWithEmptyBodyIs400) {
  EXPECT_EQ(service_.HandleScan("").status, 400);
}

TEST_F(ServiceTest, CreateDocumentFromText) {
  const auto r = service_.HandleCreateDocument(R"({"text": "  Pasted   text. Second one."})");
  ASSERT_EQ(r.status, 201);
  EXPECT_EQ(Body(r)["text"], "Pasted text. Second one.");
  EXPECT_EQ(service_.HandleCreateDocument("not json").status, 400);
  EXPECT_EQ(service_.HandleCreateDocument(R"({"body": "x"})").status, 400);
  EXPECT_EQ(service_.HandleCreateDocument(R"({"text": "   "})").status, 400);
}

TEST_F(ServiceTest, SummaryDefaultsAndValidation) {
  const auto id = Body(service_.HandleScan("img"))["document_id"].get<std::string>();
  const auto r = service_.HandleSummary(id, std::nullopt, std::nullopt);
  ASSERT_EQ(r.status, 200) << r.body;
  const Summary summary = SummaryFromJson(Body(r));
  EXPECT_EQ(summary.config.k, 5u);
  EXPECT_EQ(summary.config.method, SummaryMethod::kTextRank);
  EXPECT_LE(summary.selected.size(), 5u);
  EXPECT_TRUE(std::is_sorted(summary.selected.begin(), summary.selected.end()));

  for (const char* k : {"0", "-1", "abc", "", "2x"}) {
    EXPECT_EQ(service_.HandleSummary(id, std::string(k), std::nullopt).status, 400) << k;
  }
  EXPECT_EQ(service_.HandleSummary(id, std::nullopt, std::string("bogus")).status, 400);
  EXPECT_EQ(service_.HandleSummary(id, std::nullopt, std::string("abstractive")).status,
            400);
  EXPECT_EQ(service_.HandleSummary("missing", std::nullopt, std::nullopt).status, 404);
  EXPECT_EQ(service_.HandleHighlights("missing", std::nullopt, std::nullopt).status, 404);
}

TEST_F(ServiceTest, SecondRequestIsByteIdenticalCacheHit) {
  const auto id = Body(service_.HandleScan("img"))["document_id"].get<std::string>();
  const auto first = service_.HandleSummary(id, std::string("3"), std::string("frequency"));
  ASSERT_EQ(first.status, 200);
  EXPECT_TRUE(std::filesystem::exists(dir_.path() / "summaries" /
                                      (id + ".frequency.3.json")));
  const auto second = service_.HandleSummary(id, std::string("3"), std::string("frequency"));
  EXPECT_EQ(first.body, second.body);
  EXPECT_EQ(Body(first)["sentences"].size(), 3u);
}

TEST_F(ServiceTest, HighlightsMatchSummary) {
  const auto id = Body(service_.HandleCreateDocument(
                           R"({"text": "Hello world. This is fine."})"))["document_id"]
                      .get<std::string>();
  const auto r = service_.HandleHighlights(id, std::string("5"), std::nullopt);
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body,
            "{\"text\":\"Hello world. This is fine.\",\"highlight_spans\":[[0,12],[13,26]]}\n");
}

TEST_F(ServiceTest, GoldenFixtureSummary) {
  service_.store().SaveDocument(FixtureDocument());
  const auto r = service_.HandleSummary("fixture_document", std::nullopt, std::nullopt);
  EXPECT_EQ(r.body, testing::ReadFile(testing::GoldenPath("fixture_summary.json")));
  const auto h = service_.HandleHighlights("fixture_document", std::nullopt, std::nullopt);
  const Json golden = Json::parse(testing::ReadFile(testing::GoldenPath("fixture_summary.json")));
  const auto highlighted = HighlightedDocumentFromJson(Body(h));
  const std::u32string text = DecodeUtf8(highlighted.text);
  ASSERT_EQ(highlighted.highlight_spans.size(), golden["sentences"].size());
  for (std::size_t i = 0; i < highlighted.highlight_spans.size(); ++i) {
    const Span span = highlighted.highlight_spans[i];
    EXPECT_EQ(EncodeUtf8(text.substr(span.start, span.length())),
              golden["sentences"][i].get<std::string>());
  }
}

TEST_F(ServiceTest, ListingNewestFirst) {
  EXPECT_EQ(service_.HandleListDocuments().body, "{\"documents\":[]}\n");
  service_.store().SaveDocument(RawDocument{"older", DocumentSource::kText, "Old one.",
                                            Now() - 10s});
  service_.store().SaveDocument(RawDocument{"newer", DocumentSource::kText, "New one.",
                                            Now()});
  const auto docs = Body(service_.HandleListDocuments())["documents"];
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0]["id"], "newer");
  EXPECT_EQ(docs[0]["preview"], "New one.");
  EXPECT_EQ(docs[1]["id"], "older");
  EXPECT_EQ(service_.HandleGetDocument("nope").status, 404);
}

TEST_F(ServiceTest, RestartPreservesDocumentsAndSummaries) {
  const auto id = Body(service_.HandleScan("img"))["document_id"].get<std::string>();
  const auto before = service_.HandleSummary(id, std::nullopt, std::nullopt).body;
  SummaryService restarted(BaseConfig(dir_.path()));
  EXPECT_EQ(restarted.HandleGetDocument(id).status, 200);
  EXPECT_EQ(restarted.HandleSummary(id, std::nullopt, std::nullopt).body, before);
}

TEST_F(ServiceTest, ConcurrentSummaryRequests) {
  const auto id = Body(service_.HandleScan("img"))["document_id"].get<std::string>();
  std::vector<std::string> bodies(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    threads.emplace_back([&, i] {
      bodies[i] = service_.HandleSummary(id, std::string("4"), std::nullopt).body;
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& body : bodies) EXPECT_EQ(body, bodies.front());
}

TEST(ServiceErrorMappingTest, StatusTable) {
  EXPECT_EQ(HttpStatusFor(ErrorKind::kEmptyDocument), 400);
  EXPECT_EQ(HttpStatusFor(ErrorKind::kInvalidArgument), 400);
  EXPECT_EQ(HttpStatusFor(ErrorKind::kUnsupportedMethod), 400);
  EXPECT_EQ(HttpStatusFor(ErrorKind::kNotFound), 404);
  EXPECT_EQ(HttpStatusFor(ErrorKind::kProviderUnreachable), 502);
  EXPECT_EQ(HttpStatusFor(ErrorKind::kProviderTimeout), 502);
  EXPECT_EQ(HttpStatusFor(ErrorKind::kProviderBadResponse), 502);
  EXPECT_EQ(HttpStatusFor(ErrorKind::kStorageFailure), 500);
}

TEST(ServiceProviderTest, ProviderFailuresAre502) {
  testing::StubServer stub([](httplib::Server& s) {
    s.Post("/slow", [](const httplib::Request&, httplib::Response& res) {
      std::this_thread::sleep_for(1200ms);
      res.set_content(R"({"text": "late"})", "application/json");
    });
    s.Post("/ok", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(R"({"text": "Recognized text. From a photo."})", "application/json");
    });
  });
  testing::TempDir dir;
  auto config = BaseConfig(dir.path());
  config.ocr.kind = OcrProviderConfig::Kind::kExternal;
  config.ocr.fixture_text.reset();
  config.ocr.timeout = 200ms;

  config.ocr.endpoint_url = stub.url("/slow");
  EXPECT_EQ(SummaryService(config).HandleScan("img").status, 502);

  config.ocr.endpoint_url = "http://127.0.0.1:1/ocr";
  EXPECT_EQ(SummaryService(config).HandleScan("img").status, 502);

  config.ocr.endpoint_url = stub.url("/ok");
  SummaryService ok(config);
  const auto r = ok.HandleScan("img");
  ASSERT_EQ(r.status, 201);
  const auto id = Body(r)["document_id"].get<std::string>();
  EXPECT_EQ(Body(ok.HandleGetDocument(id))["source"], "ocr");
}

TEST(ServiceConstructionTest, InvalidConfigThrows) {
  testing::TempDir dir;
  auto config = BaseConfig(dir.path());
  config.embeddings = dir.path() / "missing.txt";
  EXPECT_THROW(SummaryService{config}, Error);
}

TEST(ServiceHttpTest, RoutesOverHttp) {
  testing::TempDir dir;
  std::filesystem::create_directories(dir.path() / "ui");
  std::ofstream(dir.path() / "ui" / "index.html") << "<html>lens</html>";
  auto config = BaseConfig(dir.path() / "data");
  config.static_dir = dir.path() / "ui";
  SummaryService service(config);
  const int port = service.Bind("127.0.0.1", 0);
  std::thread runner([&] { service.Run(); });
  service.WaitUntilReady();

  httplib::Client client("127.0.0.1", port);
  auto scan = client.Post("/api/v1/scan", std::string("\x01\x02", 2),
                          "application/octet-stream");
  ASSERT_TRUE(scan);
  EXPECT_EQ(scan->status, 201);
  EXPECT_EQ(scan->get_header_value("Content-Type"), "application/json");
  const auto id = Json::parse(scan->body)["document_id"].get<std::string>();

  auto pasted = client.Post("/api/v1/documents", R"({"text": "One. Two."})",
                            "application/json");
  ASSERT_TRUE(pasted);
  EXPECT_EQ(pasted->status, 201);

  auto summary = client.Get("/api/v1/documents/" + id + "/summary?k=2&method=frequency");
  ASSERT_TRUE(summary);
  EXPECT_EQ(summary->status, 200);
  EXPECT_EQ(Json::parse(summary->body)["selected"].size(), 2u);

  auto highlights = client.Get("/api/v1/documents/" + id + "/highlights?k=2&method=frequency");
  ASSERT_TRUE(highlights);
  EXPECT_EQ(Json::parse(highlights->body)["highlight_spans"].size(), 2u);

  auto bad_k = client.Get("/api/v1/documents/" + id + "/summary?k=0");
  ASSERT_TRUE(bad_k);
  EXPECT_EQ(bad_k->status, 400);
  EXPECT_EQ(Json::parse(bad_k->body)["error"], "invalid_argument");

  auto list = client.Get("/api/v1/documents");
  ASSERT_TRUE(list);
  EXPECT_EQ(Json::parse(list->body)["documents"].size(), 2u);

  auto doc = client.Get("/api/v1/documents/" + id);
  ASSERT_TRUE(doc);
  EXPECT_EQ(Json::parse(doc->body)["id"], id);

  auto missing = client.Get("/api/v1/documents/unknown/summary");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);

  auto no_route = client.Get("/api/v2/nothing");
  ASSERT_TRUE(no_route);
  EXPECT_EQ(no_route->status, 404);
  EXPECT_EQ(Json::parse(no_route->body)["error"], "not_found");

  auto index = client.Get("/index.html");
  ASSERT_TRUE(index);
  EXPECT_EQ(index->body, "<html>lens</html>");

  service.Stop();
  runner.join();
}

}  // namespace
}  // namespace summarylens
