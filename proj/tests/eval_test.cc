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

#include "normkit/eval.h"

#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "normkit/backend.h"
#include "normkit/dates.h"
#include "normkit/error.h"
#include "normkit/rng.h"
#include "normkit/text.h"

namespace normkit {
namespace {

// Fuzz set: 1000 random strings drawn from a mix of date-like characters,
// accented letters and whitespace.
std::vector<std::string> FuzzSet() {
  static const std::u32string alphabet =
      U"0123456789/+-dmy abcçãéíóúAZ\t,.:";
  std::vector<std::string> out;
  for (int i = 0; i < 1000; ++i) {
    RecordRng rng(99, i, Stream::kPayload);
    std::u32string s;
    int len = static_cast<int>(rng.Uniform(1, 24));
    for (int k = 0; k < len; ++k) {
      s.push_back(alphabet[rng.Uniform(0, alphabet.size() - 1)]);
    }
    out.push_back(EncodeUtf8(s));
  }
  return out;
}

TEST(ExactMatchTest, Examples) {
  EXPECT_TRUE(ExactMatch("15/01/2021", "15/01/2021"));
  EXPECT_FALSE(ExactMatch("15/1/2021", "15/01/2021"));
  EXPECT_FALSE(ExactMatch("-100d ", "-100d"));
  EXPECT_FALSE(ExactMatch(" -100d", "-100d"));
  EXPECT_TRUE(ExactMatch("-100d\n", "-100d"));
  EXPECT_FALSE(ExactMatch("-100d\n\n", "-100d"));
  EXPECT_FALSE(ExactMatch("-100d\r\n", "-100d"));
  EXPECT_TRUE(ExactMatch("", ""));
}

TEST(ExactMatchTest, Reflexive) {
  for (const std::string &s : FuzzSet()) EXPECT_TRUE(ExactMatch(s, s)) << s;
}

TEST(ExactMatchTest, SingleCharacterPerturbationBreaksMatch) {
  auto fuzz = FuzzSet();
  for (size_t i = 0; i < fuzz.size(); ++i) {
    std::u32string s = DecodeUtf8(fuzz[i]);
    RecordRng rng(5, i, Stream::kNoiseOps);
    size_t at = static_cast<size_t>(rng.Uniform(0, s.size() - 1));
    std::u32string sub = s, del = s, ins = s;
    sub[at] = sub[at] == U'x' ? U'y' : U'x';
    del.erase(at, 1);
    ins.insert(at, 1, U'x');
    EXPECT_FALSE(ExactMatch(EncodeUtf8(sub), fuzz[i]));
    EXPECT_FALSE(ExactMatch(EncodeUtf8(del), fuzz[i]));
    EXPECT_FALSE(ExactMatch(EncodeUtf8(ins), fuzz[i]));
    EXPECT_FALSE(ExactMatch(fuzz[i], EncodeUtf8(sub)));
  }
}

TEST(ExactMatchTest, OnlyOneTrailingNewlineTolerated) {
  for (const std::string &s : FuzzSet()) {
    EXPECT_TRUE(ExactMatch(s + "\n", s));
    EXPECT_FALSE(ExactMatch(s + "\n\n", s));
    EXPECT_FALSE(ExactMatch(s, s + "\n"));
    EXPECT_FALSE(ExactMatch(s + " ", s));
  }
}

EvalCorpus Complete(double noise, int count = 3000) {
  DateCorpusConfig c;
  c.count = count;
  c.noise.level = noise;
  Corpus corpus = GenerateDateCorpus(c);
  return {corpus.records, corpus.manifest};
}

// Stub backend with fixed answers.
class TableBackend : public Backend {
 public:
  explicit TableBackend(std::function<std::optional<std::string>(const Record &)> f)
      : f_(std::move(f)) {}
  std::string Id() const override { return "table"; }
  BackendResult Predict(const std::vector<const Record *> &records) override {
    BackendResult r;
    for (const Record *rec : records) {
      r.outputs.push_back(f_(*rec));
      r.settled.push_back(true);
    }
    return r;
  }

 private:
  std::function<std::optional<std::string>(const Record &)> f_;
};

TEST(EvaluateTest, RulesOnCleanTestSplitIsPerfect) {
  RulesBackend rules(4);
  EvalReport report = Evaluate(rules, {Complete(0.0)});
  EXPECT_TRUE(report.ok());
  EXPECT_GT(report.total, 0);
  EXPECT_EQ(report.accuracy, 1.0);
  ASSERT_FALSE(report.table.empty());
  EXPECT_EQ(report.table[0].range, "in_range");
  EXPECT_EQ(report.table[0].noise_level, "0");
}

TEST(EvaluateTest, OnlyTestFormatsScoredByDefault) {
  EvalCorpus corpus = Complete(0.0);
  int64_t test = 0;
  for (const Record &r : corpus.records) {
    test += corpus.manifest.IsTestFormat(r.format_id);
  }
  RulesBackend rules;
  EXPECT_EQ(Evaluate(rules, {corpus}).total, test);
  EvalOptions all;
  all.all_formats = true;
  EXPECT_EQ(Evaluate(rules, {corpus}, all).total,
            static_cast<int64_t>(corpus.records.size()));
}

TEST(EvaluateTest, EchoAccuracyIsShareOfCanonicalInputs) {
  EvalCorpus corpus = Complete(0.0, 5000);
  EvalOptions all;
  all.all_formats = true;
  int64_t same = 0;
  for (const Record &r : corpus.records) same += r.input == r.target;
  TableBackend echo([](const Record &r) { return r.input; });
  EvalReport report = Evaluate(echo, {corpus}, all);
  EXPECT_EQ(report.correct, same);
  EXPECT_GT(same, 0);
}

TEST(EvaluateTest, MissingPredictionsScoreWrong) {
  EvalCorpus corpus = Complete(0.0, 200);
  TableBackend none([](const Record &) { return std::nullopt; });
  EvalReport report = Evaluate(none, {corpus});
  EXPECT_EQ(report.correct, 0);
  EXPECT_EQ(report.accuracy, 0.0);
}

TEST(EvaluateTest, EmptyCorpus) {
  RulesBackend rules;
  EvalCorpus empty = Complete(0.0, 0);
  EvalReport report = Evaluate(rules, {empty});
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.total, 0);
  EXPECT_TRUE(report.rows.empty());
  EXPECT_TRUE(report.table.empty());
}

TEST(EvaluateTest, NoiseDegradesAccuracy) {
  RulesBackend rules(4);
  EvalReport clean = Evaluate(rules, {Complete(0.0)});
  EvalReport noisy = Evaluate(rules, {Complete(0.5)});
  EXPECT_EQ(clean.accuracy, 1.0);
  EXPECT_LE(noisy.accuracy, clean.accuracy);
}

TEST(EvaluateTest, BucketsAndHash) {
  RulesBackend rules;
  EvalCorpus a = Complete(0.0, 500);
  EvalCorpus b = Complete(0.3, 500);
  DateCorpusConfig pc;
  auto probes = GenerateOutOfRangeProbes(pc, ProbeSide::kBelow, 20);
  EvalCorpus p{probes, a.manifest};
  EvalReport report = Evaluate(rules, {a, b, p});
  std::set<std::string> noise, range;
  for (const EvalRow &row : report.rows) {
    if (row.dimension == "noise") noise.insert(row.bucket);
    if (row.dimension == "range") range.insert(row.bucket);
  }
  EXPECT_EQ(noise, (std::set<std::string>{"0", "0.3"}));
  EXPECT_EQ(range, (std::set<std::string>{"in_range", "below_range"}));
  EXPECT_EQ(report.corpus_hash, Evaluate(rules, {a, b, p}).corpus_hash);
  EXPECT_NE(report.corpus_hash, Evaluate(rules, {a, b}).corpus_hash);
}

TEST(EvaluateTest, RangeBucket) {
  SplitManifest m;
  m.year_min = 1921;
  m.year_max = 2120;
  Record r;
  r.target = "01/01/1920";
  EXPECT_EQ(RangeBucket(r, m), "below_range");
  r.target = "01/01/2121";
  EXPECT_EQ(RangeBucket(r, m), "above_range");
  r.target = "01/2000";
  EXPECT_EQ(RangeBucket(r, m), "in_range");
  r.target = "-3d";
  EXPECT_EQ(RangeBucket(r, m), "no_year");
  EXPECT_EQ(NoiseBucket(0.0), "0");
  EXPECT_EQ(NoiseBucket(0.5), "0.5");
}

TEST(EvaluateTest, ParallelismDoesNotChangeReport) {
  EvalCorpus corpus = Complete(0.5, 2000);
  RulesBackend one(1), eight(8);
  EvalOptions o;
  o.timestamp = "fixed";
  EXPECT_EQ(ReportToJson(Evaluate(one, {corpus}, o)).dump(),
            ReportToJson(Evaluate(eight, {corpus}, o)).dump());
}

TEST(ReportTest, JsonShape) {
  RulesBackend rules;
  EvalOptions o;
  o.timestamp = "2021-01-01T00:00:00Z";
  auto j = ReportToJson(Evaluate(rules, {Complete(0.0, 300)}, o));
  EXPECT_EQ(j["metadata"]["backend"], "rules");
  EXPECT_EQ(j["metadata"]["timestamp"], "2021-01-01T00:00:00Z");
  EXPECT_EQ(j["metadata"]["status"], "ok");
  EXPECT_EQ(j["metadata"]["seed"], 7);
  EXPECT_TRUE(j["metadata"].contains("corpus_hash"));
  EXPECT_TRUE(j["metadata"].contains("tool_version"));
  EXPECT_TRUE(j.contains("total"));
  EXPECT_TRUE(j["rows"].is_array());
  for (const auto &row : j["rows"]) {
    EXPECT_TRUE(row.contains("dimension"));
    EXPECT_TRUE(row.contains("bucket"));
    EXPECT_TRUE(row.contains("n"));
    EXPECT_TRUE(row.contains("correct"));
    EXPECT_TRUE(row.contains("accuracy"));
  }
}

TEST(ReportTest, MarkdownTable) {
  RulesBackend rules;
  std::string md = ReportToMarkdown(Evaluate(rules, {Complete(0.0, 300)}));
  EXPECT_NE(md.find("| noise | range | n | correct | accuracy |"),
            std::string::npos);
  EXPECT_NE(md.find("| 0 | in_range |"), std::string::npos);
  EXPECT_NE(md.find("1.0000"), std::string::npos);
}

TEST(BucketDimensionTest, Parse) {
  EXPECT_EQ(ParseBucketDimension("range"), BucketDimension::kRange);
  EXPECT_EQ(ParseBucketDimension("noise"), BucketDimension::kNoise);
  EXPECT_EQ(ParseBucketDimension("format"), BucketDimension::kFormat);
  EXPECT_THROW(ParseBucketDimension("size"), Error);
}

}  // namespace
}  // namespace normkit
