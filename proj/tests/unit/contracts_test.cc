// Copyright 2026 The repattack Authors
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

// Replays the recorded HTTP contract fixtures against the clients: each
// client must send exactly the recorded request and accept or reject the
// recorded response as marked.

#include <string>

#include "gtest/gtest.h"
#include "json.hpp"
#include "repattack/error.h"
#include "repattack/evaluation.h"
#include "repattack/rephraser.h"
#include "repattack/victims.h"
#include "test_util.h"

namespace repattack {
namespace {

using nlohmann::json;
using ::repattack::testing::LocalServer;
using ::repattack::testing::ReadFile;
using ::repattack::testing::TestDataPath;

json LoadFixture(const std::string& name) {
  return json::parse(ReadFile(TestDataPath("contracts/" + name)));
}

// Serves one recorded response and remembers the last request body.
class ReplayServer {
 public:
  explicit ReplayServer(const json& response) {
    server_.server().Post(
        "/endpoint",
        [this, response](const httplib::Request& req, httplib::Response& res) {
          request_ = json::parse(req.body);
          res.set_content(response.dump(), "application/json");
        });
    server_.Start();
  }
  std::string url() const { return server_.Url("/endpoint"); }
  const json& request() const { return request_; }

 private:
  LocalServer server_;
  json request_;
};

TEST(ContractsTest, VictimFixtures) {
  const json fixture = LoadFixture("victim.json");
  ASSERT_FALSE(fixture["cases"].empty());
  for (const json& c : fixture["cases"]) {
    SCOPED_TRACE(c["name"].get<std::string>());
    ReplayServer server(c["response"]);
    HttpVictimOptions options;
    options.url = server.url();
    HttpVictim victim(options);
    const std::string text = c["request"]["text"];
    if (c["valid"].get<bool>()) {
      const VictimVerdict verdict = victim.Classify(text);
      EXPECT_EQ(verdict.label, c["response"]["label"].get<int>());
      EXPECT_EQ(verdict.probabilities[0],
                c["response"]["probabilities"][0].get<double>());
      EXPECT_EQ(verdict.probabilities[1],
                c["response"]["probabilities"][1].get<double>());
      EXPECT_TRUE(verdict.IsValid());
    } else {
      EXPECT_THROW(victim.Classify(text), MalformedResponse);
    }
    EXPECT_EQ(server.request(), c["request"]);
  }
}

TEST(ContractsTest, ScorerFixtures) {
  const json fixture = LoadFixture("scorer.json");
  for (const json& c : fixture["cases"]) {
    SCOPED_TRACE(c["name"].get<std::string>());
    ReplayServer server(c["response"]);
    HttpScorer scorer({server.url()});
    const std::string reference = c["request"]["reference"];
    const std::string candidate = c["request"]["candidate"];
    if (c["valid"].get<bool>()) {
      EXPECT_EQ(scorer.Score(reference, candidate),
                c["response"]["score"].get<double>());
    } else {
      EXPECT_THROW(scorer.Score(reference, candidate), MalformedResponse);
    }
    EXPECT_EQ(server.request(), c["request"]);
  }
  EXPECT_EQ(fixture["ordering_pairs"].size(), 10u);
}

TEST(ContractsTest, LexicalScorerRespectsOrderingPairs) {
  const json fixture = LoadFixture("scorer.json");
  LexicalScorer scorer;
  for (const json& pair : fixture["ordering_pairs"]) {
    const std::string a = pair[0];
    const std::string b = pair[1];
    EXPECT_GE(scorer.Score(a, a), scorer.Score(a, b)) << a;
  }
}

TEST(ContractsTest, RephraseFixtures) {
  const json fixture = LoadFixture("rephrase.json");
  for (const json& c : fixture["cases"]) {
    SCOPED_TRACE(c["name"].get<std::string>());
    ReplayServer server(c["response"]);
    HttpBackendOptions options;
    options.url = server.url();
    options.model = c["request"]["model"];
    options.api_key_env.clear();
    HttpBackend backend(options);
    const std::string text = c["fragment"];
    const Fragment fragment{text, 0, text.size()};
    const PromptKind kind = ParsePromptKind(c["kind"].get<std::string>());
    const RetryPolicy no_retry{0, std::chrono::milliseconds(0)};
    if (c["valid"].get<bool>()) {
      EXPECT_EQ(RequestRephrasings(backend, kind, fragment, no_retry),
                c["parsed"].get<std::vector<std::string>>());
    } else {
      EXPECT_THROW(RequestRephrasings(backend, kind, fragment, no_retry),
                   MalformedResponse);
    }
    EXPECT_EQ(server.request(), c["request"]);
  }
}

}  // namespace
}  // namespace repattack
