// Copyright 2026 The normkit Authors.
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

#include "normkit/gazetteer.h"

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "normkit/error.h"
#include "normkit/lexicon.h"

namespace normkit {
namespace {

GazetteerLoad Load(const std::string &text) {
  std::stringstream s(text);
  return IngestGazetteerCsv(s);
}

const char *kHeader = "cep,logradouro,bairro,cidade,estado\n";

TEST(Gazetteer, ValidRow) {
  auto load = Load(std::string(kHeader) +
                   "13015904,Rua Barão de Itapura,Botafogo,Campinas,SP\n");
  ASSERT_EQ(load.entries.size(), 1u);
  EXPECT_EQ(load.malformed_rows, 0u);
  EXPECT_EQ(load.entries[0],
            (GazetteerEntry{"13015904", "Rua Barão de Itapura", "Botafogo",
                            "Campinas", "SP"}));
}

TEST(Gazetteer, HyphenatedCepAccepted) {
  auto load = Load(std::string(kHeader) +
                   "13015-904,Rua Barão de Itapura,Botafogo,Campinas,SP\n");
  ASSERT_EQ(load.entries.size(), 1u);
  EXPECT_EQ(load.entries[0].cep, "13015904");
}

TEST(Gazetteer, MalformedRowsCounted) {
  auto load = Load(std::string(kHeader) +
                   "13015904,Rua A,Centro,Campinas,XX\n"
                   "1301590,Rua A,Centro,Campinas,SP\n"
                   "13015904,,Centro,Campinas,SP\n"
                   "13015904,Rua A,Centro\n"
                   "01001000,Praça da Sé,Sé,São Paulo,SP\n");
  EXPECT_EQ(load.entries.size(), 1u);
  EXPECT_EQ(load.malformed_rows, 4u);
  ASSERT_EQ(load.problems.size(), 4u);
  EXPECT_EQ(load.problems[0].line, 2u);
}

TEST(Gazetteer, EmptyInput) {
  auto load = Load("");
  EXPECT_TRUE(load.entries.empty());
  EXPECT_EQ(load.malformed_rows, 0u);
  load = Load(kHeader);
  EXPECT_TRUE(load.entries.empty());
  EXPECT_EQ(load.malformed_rows, 0u);
}

TEST(Gazetteer, DuplicatesDropped) {
  std::string row = "01001000,Praça da Sé,Sé,São Paulo,SP\n";
  auto load = Load(std::string(kHeader) + row + row);
  EXPECT_EQ(load.entries.size(), 1u);
  EXPECT_EQ(load.duplicates, 1u);
}

TEST(Gazetteer, QuotedFields) {
  auto cells = ParseCsvLine(R"(1,"a, b","say ""hi""",c)");
  ASSERT_EQ(cells.size(), 4u);
  EXPECT_EQ(cells[1], "a, b");
  EXPECT_EQ(cells[2], "say \"hi\"");
}

TEST(Gazetteer, WriteThenIngest) {
  std::vector<GazetteerEntry> entries = {
      {"01001000", "Praça da Sé", "Sé", "São Paulo", "SP"},
      {"20040002", "Rua X, Y", "Centro", "Rio de Janeiro", "RJ"}};
  std::stringstream s;
  WriteGazetteerCsv(s, entries);
  EXPECT_EQ(IngestGazetteerCsv(s).entries, entries);
}

TEST(Gazetteer, ShippedFixtureIsClean) {
  auto load = IngestGazetteerFile(std::string(NORMKIT_DATA_DIR) +
                                  "/gazetteer.csv");
  EXPECT_EQ(load.malformed_rows, 0u);
  EXPECT_GT(load.entries.size(), 1000u);
  EXPECT_EQ(load.entries, DefaultGazetteer());
  for (const auto &e : load.entries) EXPECT_TRUE(IsUf(e.estado));
}

TEST(Gazetteer, ApiJsonMapping) {
  auto e = EntryFromApiJson(
      "13015904",
      R"({"cep":"13015-904","logradouro":"Rua Barão de Itapura","bairro":"Botafogo","localidade":"Campinas","uf":"SP"})");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->cidade, "Campinas");
  EXPECT_FALSE(EntryFromApiJson("00000000", R"({"erro": true})"));
  EXPECT_FALSE(EntryFromApiJson("00000000", "not json"));
}

// Local HTTP server standing in for the CEP API.
class CepServer {
 public:
  CepServer() {
    server_.Get(R"(/ws/(\d+)/json)", [this](const httplib::Request &req,
                                            httplib::Response &res) {
      ++hits_;
      last_auth_ = req.get_header_value("Authorization");
      std::string cep = req.matches[1];
      if (cep == "99999999") {
        res.status = 404;
        return;
      }
      if (cep == "55555555" && flaky_left_-- > 0) {
        res.status = 503;
        return;
      }
      if (cep == "44444444") {
        res.status = 500;
        return;
      }
      res.set_content(
          R"({"logradouro":"Rua A","bairro":"Centro","localidade":"Campinas","uf":"SP"})",
          "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~CepServer() {
    server_.stop();
    thread_.join();
  }
  std::string Url() const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/ws/{cep}/json";
  }
  int hits() const { return hits_; }
  std::string last_auth() const { return last_auth_; }
  void set_flaky(int n) { flaky_left_ = n; }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::atomic<int> hits_{0};
  std::atomic<int> flaky_left_{0};
  std::string last_auth_;
};

CepClientConfig Config(const CepServer &server) {
  CepClientConfig c;
  c.base_url = server.Url();
  c.credential_env = "NORMKIT_TEST_CEP_TOKEN";
  c.timeout = std::chrono::seconds(5);
  return c;
}

CepClient Client(CepClientConfig c, std::vector<std::chrono::milliseconds> *waits) {
  CepClient client(std::move(c));
  client.set_sleeper([waits](std::chrono::milliseconds d) {
    if (waits) waits->push_back(d);
  });
  return client;
}

TEST(CepClientTest, RejectsNonHttpScheme) {
  for (const char *url : {"https://example.org/ws/{cep}/json", "ftp://x/", "example.org"}) {
    CepClientConfig c;
    c.base_url = url;
    try {
      CepClient client(c);
      ADD_FAILURE() << url;
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument) << url;
    }
  }
}

TEST(CepClientTest, LookupSendsCredential) {
  CepServer server;
  setenv("NORMKIT_TEST_CEP_TOKEN", "secret", 1);
  CepClient client = Client(Config(server), nullptr);
  GazetteerEntry e = client.Lookup("13015-904");
  EXPECT_EQ(e.cep, "13015904");
  EXPECT_EQ(e.cidade, "Campinas");
  EXPECT_EQ(server.last_auth(), "Bearer secret");
  unsetenv("NORMKIT_TEST_CEP_TOKEN");
}

TEST(CepClientTest, RetriesWithBackoff) {
  CepServer server;
  server.set_flaky(2);
  std::vector<std::chrono::milliseconds> waits;
  CepClient client = Client(Config(server), &waits);
  EXPECT_EQ(client.Lookup("55555555").bairro, "Centro");
  EXPECT_EQ(server.hits(), 3);
  ASSERT_EQ(waits.size(), 2u);
  EXPECT_EQ(waits[0].count(), 200);
  EXPECT_EQ(waits[1].count(), 400);
}

TEST(CepClientTest, GivesUpAfterMaxAttempts) {
  CepServer server;
  std::vector<std::chrono::milliseconds> waits;
  CepClient client = Client(Config(server), &waits);
  try {
    client.Lookup("44444444");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kLookupFailure);
  }
  EXPECT_EQ(server.hits(), 3);
}

TEST(CepClientTest, NotFoundFailsImmediately) {
  CepServer server;
  CepClient client = Client(Config(server), nullptr);
  EXPECT_THROW(client.Lookup("99999999"), Error);
  EXPECT_EQ(server.hits(), 1);
}

TEST(CepClientTest, MalformedCepRejectedWithoutRequest) {
  CepServer server;
  CepClient client = Client(Config(server), nullptr);
  EXPECT_THROW(client.Lookup("123"), Error);
  EXPECT_EQ(server.hits(), 0);
}

TEST(CepClientTest, UnreachableHostFails) {
  CepClientConfig c;
  c.base_url = "http://127.0.0.1:1/{cep}";
  c.max_attempts = 2;
  CepClient client = Client(c, nullptr);
  EXPECT_THROW(client.Lookup("01001000"), Error);
}

TEST(CepClientTest, CacheAvoidsSecondRequest) {
  CepServer server;
  auto dir = std::filesystem::temp_directory_path() /
             ("normkit_cep_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  CepClientConfig c = Config(server);
  c.cache_path = (dir / "cache.json").string();
  {
    CepClient client = Client(c, nullptr);
    FetchResult r = client.FetchAll({"01001000", "99999999", "13015904"});
    EXPECT_EQ(r.entries.size(), 2u);
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.failures[0].cep, "99999999");
  }
  int hits = server.hits();
  CepClient again = Client(c, nullptr);
  FetchResult r = again.FetchAll({"01001000", "13015904"});
  EXPECT_EQ(r.cache_hits, 2u);
  EXPECT_EQ(server.hits(), hits);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace normkit
