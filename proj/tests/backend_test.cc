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

#include "normkit/backend.h"

#include <gtest/gtest.h>

#include "normkit/dates.h"
#include "normkit/eval.h"
#include "normkit/normalizer.h"

namespace normkit {
namespace {

std::vector<Record> Records(int n) {
  DateCorpusConfig c;
  c.count = n;
  return GenerateDateCorpus(c).records;
}

std::vector<const Record *> Ptrs(const std::vector<Record> &records) {
  std::vector<const Record *> out;
  for (const Record &r : records) out.push_back(&r);
  return out;
}

ProcessBackend Fake(const std::string &args, size_t in_flight = 32,
                    std::chrono::milliseconds timeout = std::chrono::seconds(20)) {
  ProcessBackendConfig c;
  c.command = std::string(FAKE_BACKEND) + " " + args;
  c.max_in_flight = in_flight;
  c.timeout = timeout;
  return ProcessBackend(c);
}

TEST(ProcessBackendTest, EchoAnswersEveryId) {
  auto records = Records(500);
  ProcessBackend b = Fake("echo", 7);
  BackendResult r = b.Predict(Ptrs(records));
  ASSERT_FALSE(r.failure) << r.failure_message;
  ASSERT_EQ(r.outputs.size(), 500u);
  for (size_t i = 0; i < records.size(); ++i) {
    ASSERT_TRUE(r.settled[i]);
    ASSERT_EQ(r.outputs[i], records[i].input);
  }
}

TEST(ProcessBackendTest, OutOfOrderAnswersMatchedById) {
  auto records = Records(64);
  ProcessBackend b = Fake("reorder", 64);
  BackendResult r = b.Predict(Ptrs(records));
  ASSERT_FALSE(r.failure) << r.failure_message;
  for (size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(r.outputs[i], records[i].input);
  }
}

TEST(ProcessBackendTest, CrashReported) {
  auto records = Records(100);
  ProcessBackend b = Fake("crash 10", 4);
  BackendResult r = b.Predict(Ptrs(records));
  ASSERT_TRUE(r.failure);
  EXPECT_EQ(*r.failure, ErrorCode::kBackendCrash);
  size_t answered = 0;
  for (size_t i = 0; i < records.size(); ++i) answered += r.outputs[i].has_value();
  EXPECT_EQ(answered, 10u);
}

TEST(ProcessBackendTest, GarbageIsProtocolViolation) {
  auto records = Records(10);
  ProcessBackend b = Fake("garbage");
  BackendResult r = b.Predict(Ptrs(records));
  ASSERT_TRUE(r.failure);
  EXPECT_EQ(*r.failure, ErrorCode::kProtocolViolation);
}

TEST(ProcessBackendTest, UnknownIdIsProtocolViolation) {
  auto records = Records(10);
  ProcessBackend b = Fake("unknown");
  BackendResult r = b.Predict(Ptrs(records));
  ASSERT_TRUE(r.failure);
  EXPECT_EQ(*r.failure, ErrorCode::kProtocolViolation);
}

TEST(ProcessBackendTest, TimeoutsSettleAsWrong) {
  auto records = Records(20);
  ProcessBackend b = Fake("hang 5", 32, std::chrono::milliseconds(300));
  BackendResult r = b.Predict(Ptrs(records));
  ASSERT_FALSE(r.failure) << r.failure_message;
  EXPECT_EQ(r.timeouts, 4u);
  for (size_t i = 0; i < records.size(); ++i) {
    EXPECT_TRUE(r.settled[i]);
    EXPECT_EQ(r.outputs[i].has_value(), i % 5 != 0) << i;
  }
}

TEST(ProcessBackendTest, ErrorResponsesSettleWithoutOutput) {
  auto records = Records(20);
  ProcessBackend b = Fake("error 4");
  BackendResult r = b.Predict(Ptrs(records));
  ASSERT_FALSE(r.failure) << r.failure_message;
  for (size_t i = 0; i < records.size(); ++i) {
    EXPECT_TRUE(r.settled[i]);
    EXPECT_EQ(r.outputs[i].has_value(), i % 4 != 0) << i;
  }
}

TEST(ProcessBackendTest, MissingCommandIsCrash) {
  auto records = Records(3);
  ProcessBackendConfig c;
  c.command = "/nonexistent/normkit-backend";
  ProcessBackend b(c);
  BackendResult r = b.Predict(Ptrs(records));
  ASSERT_TRUE(r.failure);
  EXPECT_EQ(*r.failure, ErrorCode::kBackendCrash);
}

TEST(ProcessBackendTest, EmptyBatch) {
  ProcessBackend b = Fake("echo");
  BackendResult r = b.Predict({});
  EXPECT_FALSE(r.failure);
  EXPECT_TRUE(r.outputs.empty());
}

// The builtin normalizer without a language hint, as the fake server runs it.
class UnhintedRules : public Backend {
 public:
  std::string Id() const override { return "unhinted"; }
  BackendResult Predict(const std::vector<const Record *> &records) override {
    BackendResult r;
    for (const Record *rec : records) {
      try {
        r.outputs.push_back(Normalize(rec->input).canonical);
      } catch (const std::exception &) {
        r.outputs.push_back(std::string());
      }
      r.settled.push_back(true);
    }
    return r;
  }
};

// Backend neutrality: the same predictions through the protocol score the
// same as in process.
TEST(ProcessBackendTest, NeutralWithBuiltin) {
  DateCorpusConfig c;
  c.count = 1500;
  c.noise.level = 0.5;
  Corpus corpus = GenerateDateCorpus(c);
  EvalOptions o;
  o.timestamp = "fixed";
  UnhintedRules rules;
  ProcessBackend proc = Fake("rules", 16);
  EvalReport a = Evaluate(rules, {{corpus.records, corpus.manifest}}, o);
  EvalReport b = Evaluate(proc, {{corpus.records, corpus.manifest}}, o);
  ASSERT_TRUE(b.ok()) << b.status_message;
  EXPECT_EQ(a.correct, b.correct);
  EXPECT_EQ(a.total, b.total);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].correct, b.rows[i].correct);
  }
}

TEST(EvaluateWithProcess, CrashGivesPartialReport) {
  DateCorpusConfig c;
  c.count = 400;
  Corpus corpus = GenerateDateCorpus(c);
  ProcessBackend crash = Fake("crash 20", 4);
  EvalOptions all;
  all.all_formats = true;
  EvalReport r = Evaluate(crash, {{corpus.records, corpus.manifest}}, all);
  EXPECT_EQ(r.status, "backend_crash");
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.total, 20);
}

}  // namespace
}  // namespace normkit
