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

#include "normkit/dates.h"

#include <gtest/gtest.h>

#include <chrono>
#include <map>
#include <set>

#include "normkit/error.h"

namespace normkit {
namespace {

TEST(Calendar, AgreesWithChrono) {
  namespace c = std::chrono;
  for (int y = 1000; y <= 9999; y += 1) {
    EXPECT_EQ(IsLeapYear(y), c::year{y}.is_leap()) << y;
    for (unsigned m = 1; m <= 12; ++m) {
      auto last = c::year_month_day_last{c::year{y}, c::month_day_last{c::month{m}}};
      ASSERT_EQ(DaysInMonth(static_cast<int>(m), y),
                static_cast<int>(static_cast<unsigned>(last.day())));
    }
  }
}

TEST(Calendar, ValidityMatchesChrono) {
  namespace c = std::chrono;
  for (int y : {1900, 1921, 2000, 2023, 2024, 2100, 2120}) {
    for (int m = 0; m <= 13; ++m) {
      for (int d = 0; d <= 32; ++d) {
        bool ok = m >= 1 && m <= 12 && d >= 1 &&
                  c::year_month_day{c::year{y}, c::month{unsigned(m)},
                                    c::day{unsigned(d)}}
                      .ok();
        EXPECT_EQ(IsValid(CanonicalDate{d, m, y}), ok) << d << "/" << m << "/" << y;
      }
    }
  }
}

TEST(CanonicalForm, Examples) {
  EXPECT_EQ(CanonicalString(CanonicalDate{1, 1, 2000}), "01/01/2000");
  EXPECT_EQ(CanonicalString(PartialDate{PartialKind::kMonthYear, std::nullopt,
                                        7, 1999}),
            "07/1999");
  EXPECT_EQ(CanonicalString(PartialDate{PartialKind::kDayMonth, 5, 12,
                                        std::nullopt}),
            "05/12");
  EXPECT_EQ(CanonicalString(RelativeDelta{Sign::kPast, 100, TimeUnit::kDay}),
            "-100d");
  EXPECT_EQ(CanonicalString(RelativeDelta{Sign::kFuture, 2, TimeUnit::kMonth}),
            "+2m");
  EXPECT_EQ(CanonicalString(RelativeDelta{Sign::kFuture, 1, TimeUnit::kYear}),
            "+1a");
}

TEST(CanonicalForm, InvalidPayloadsRejected) {
  EXPECT_FALSE(IsValid(PartialDate{PartialKind::kDayMonth, 30, 2, std::nullopt}));
  EXPECT_TRUE(IsValid(PartialDate{PartialKind::kDayMonth, 29, 2, std::nullopt}));
  EXPECT_FALSE(IsValid(RelativeDelta{Sign::kPast, 0, TimeUnit::kDay}));
}

// Hand-written reference tables.
const char *kPtMonths[] = {"janeiro", "fevereiro", "março",    "abril",
                           "maio",    "junho",     "julho",    "agosto",
                           "setembro", "outubro",  "novembro", "dezembro"};

TEST(Render, PortugueseMonthNames) {
  auto f = DateFormatTemplate::Parse("t", Language::kPt, DateKind::kComplete,
                                     "{D} de {MNAME} de {YYYY}");
  EXPECT_EQ(Render(CanonicalDate{15, 1, 2021}, f), "15 de janeiro de 2021");
  for (int m = 1; m <= 12; ++m) {
    EXPECT_EQ(Render(CanonicalDate{3, m, 1999}, f),
              std::string("3 de ") + kPtMonths[m - 1] + " de 1999");
  }
}

TEST(Render, CanonicalTemplateIsIdentity) {
  auto f = DateFormatTemplate::Parse("t", Language::kPt, DateKind::kComplete,
                                     "{DD}/{MM}/{YYYY}");
  EXPECT_EQ(Render(CanonicalDate{15, 1, 2021}, f), "15/01/2021");
}

TEST(Render, PortugueseUnitPlurals) {
  auto f = DateFormatTemplate::Parse("t", Language::kPt, DateKind::kRelative,
                                     "daqui a {N} {UNITWORD}", "",
                                     Sign::kFuture);
  EXPECT_EQ(Render(RelativeDelta{Sign::kFuture, 2, TimeUnit::kMonth}, f),
            "daqui a 2 meses");
  EXPECT_EQ(Render(RelativeDelta{Sign::kFuture, 1, TimeUnit::kMonth}, f),
            "daqui a 1 mês");
  EXPECT_EQ(Render(RelativeDelta{Sign::kFuture, 3, TimeUnit::kDay}, f),
            "daqui a 3 dias");
  EXPECT_EQ(Render(RelativeDelta{Sign::kFuture, 1, TimeUnit::kYear}, f),
            "daqui a 1 ano");
}

TEST(Render, SignMismatchIsUnsupported) {
  auto f = DateFormatTemplate::Parse("t", Language::kPt, DateKind::kRelative,
                                     "daqui a {N} {UNITWORD}", "",
                                     Sign::kFuture);
  try {
    Render(RelativeDelta{Sign::kPast, 2, TimeUnit::kDay}, f);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedSlot);
  }
}

TEST(Render, MissingSlotIsUnsupported) {
  auto f = DateFormatTemplate::Parse("t", Language::kPt, DateKind::kComplete,
                                     "{DD}/{MM}/{YYYY}");
  EXPECT_THROW(Render(PartialDate{PartialKind::kDayMonth, 1, 2, std::nullopt}, f),
               Error);
}

TEST(Template, RejectsBadTemplates) {
  auto parse = [](const char *text, DateKind kind) {
    return DateFormatTemplate::Parse("t", Language::kPt, kind, text);
  };
  EXPECT_THROW(parse("{DD}/{MM}", DateKind::kComplete), Error);
  EXPECT_THROW(parse("{DD}/{MM}/{YYYY}/{DD}", DateKind::kComplete), Error);
  EXPECT_THROW(parse("{XX}/{MM}/{YYYY}", DateKind::kComplete), Error);
  EXPECT_THROW(parse("{DD}/{MM}/{YYYY}", DateKind::kIncompleteDm), Error);
  EXPECT_NO_THROW(parse("{MM}/{YYYY}", DateKind::kIncompleteMy));
}

TEST(Inventory, ShippedCounts) {
  const DateInventory &inv = DateInventory::Default();
  for (Language lang : {Language::kPt, Language::kEn}) {
    EXPECT_EQ(inv.Select(DateKind::kComplete, lang).size(), 45u);
    EXPECT_EQ(inv.Select(DateKind::kIncompleteDm, lang).size() +
                  inv.Select(DateKind::kIncompleteMy, lang).size(),
              90u);
  }
  EXPECT_EQ(inv.Select(DateKind::kRelative, Language::kPt).size(), 36u);
  EXPECT_EQ(inv.Select(DateKind::kRelative, Language::kEn).size(), 18u);
}

TEST(Inventory, FromJsonRejectsDuplicates) {
  const char *json = R"({"formats":[
    {"id":"a","language":"pt","kind":"complete","template":"{DD}/{MM}/{YYYY}"},
    {"id":"a","language":"pt","kind":"complete","template":"{DD}-{MM}-{YYYY}"}]})";
  EXPECT_THROW(DateInventory::FromJson(json), Error);
}

TEST(Split, DefaultsAndParse) {
  EXPECT_EQ(DefaultSplit(DateKind::kComplete).train, 34);
  EXPECT_EQ(DefaultSplit(DateKind::kComplete).test, 11);
  EXPECT_EQ(DefaultSplit(DateKind::kRelative).train, 13);
  EXPECT_EQ(DefaultSplit(DateKind::kRelative).test, 5);
  SplitPolicy p = ParseSplitPolicy("40:5");
  EXPECT_EQ(p.train, 40);
  EXPECT_EQ(p.test, 5);
  EXPECT_THROW(ParseSplitPolicy("40"), Error);
  EXPECT_THROW(ParseSplitPolicy("a:b"), Error);
}

TEST(Split, PartitionIsDisjointAndComplete) {
  auto formats =
      DateInventory::Default().Select(DateKind::kComplete, Language::kPt);
  FormatSplit s = SplitFormats(formats, {34, 11}, 7);
  EXPECT_EQ(s.train.size(), 34u);
  EXPECT_EQ(s.test.size(), 11u);
  std::set<std::string> all(s.train.begin(), s.train.end());
  all.insert(s.test.begin(), s.test.end());
  EXPECT_EQ(all.size(), 45u);
}

TEST(Split, TooSmallInventory) {
  auto formats =
      DateInventory::Default().Select(DateKind::kComplete, Language::kPt);
  try {
    SplitFormats(formats, {40, 11}, 7);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kInventoryTooSmall);
  }
}

TEST(Split, RelativeFamiliesStayTogether) {
  const DateInventory &inv = DateInventory::Default();
  auto formats = inv.Select(DateKind::kRelative, Language::kPt);
  FormatSplit s = SplitFormats(formats, {13, 5}, 7);
  std::set<std::string> train_families, test_families;
  for (const auto &id : s.train) train_families.insert(inv.Find(id)->family);
  for (const auto &id : s.test) test_families.insert(inv.Find(id)->family);
  EXPECT_EQ(train_families.size(), 13u);
  EXPECT_EQ(test_families.size(), 5u);
  for (const auto &f : test_families) EXPECT_FALSE(train_families.count(f)) << f;
}

TEST(Corpus, CompleteDefaults) {
  DateCorpusConfig c;
  c.count = DefaultCorpusSize(DateKind::kComplete);
  Corpus corpus = GenerateDateCorpus(c);
  EXPECT_EQ(corpus.records.size(), 73000u);
  EXPECT_EQ(corpus.manifest.train_formats.size(), 34u);
  EXPECT_EQ(corpus.manifest.test_formats.size(), 11u);
  EXPECT_EQ(corpus.manifest.seed, 7u);
  EXPECT_EQ(corpus.manifest.year_min, 1921);
  EXPECT_EQ(corpus.manifest.year_max, 2120);
  for (const Record &r : corpus.records) {
    auto y = TargetYear(r.target);
    ASSERT_TRUE(y);
    ASSERT_GE(*y, 1921);
    ASSERT_LE(*y, 2120);
    ASSERT_TRUE(MatchesCompleteDate(r.target)) << r.target;
  }
}

TEST(Corpus, PresetSizes) {
  EXPECT_EQ(DefaultCorpusSize(DateKind::kIncompleteDm), 2500);
  EXPECT_EQ(DefaultCorpusSize(DateKind::kIncompleteMy), 7200);
  EXPECT_EQ(DefaultCorpusSize(DateKind::kRelative), 1800);
  for (DateKind k : {DateKind::kIncompleteDm, DateKind::kIncompleteMy}) {
    DateCorpusConfig c;
    c.kind = k;
    c.count = DefaultCorpusSize(k);
    EXPECT_EQ(GenerateDateCorpus(c).records.size(),
              static_cast<size_t>(c.count));
  }
}

TEST(Corpus, EmptyStillHasManifest) {
  DateCorpusConfig c;
  c.count = 0;
  Corpus corpus = GenerateDateCorpus(c);
  EXPECT_TRUE(corpus.records.empty());
  EXPECT_EQ(corpus.manifest.test_formats.size(), 11u);
}

TEST(Corpus, TargetsMatchKindGrammar) {
  for (DateKind k : {DateKind::kIncompleteDm, DateKind::kIncompleteMy,
                     DateKind::kRelative}) {
    for (Language lang : {Language::kPt, Language::kEn}) {
      DateCorpusConfig c;
      c.kind = k;
      c.language = lang;
      c.count = 2000;
      for (const Record &r : GenerateDateCorpus(c).records) {
        bool ok = k == DateKind::kIncompleteDm   ? MatchesDayMonth(r.target)
                  : k == DateKind::kIncompleteMy ? MatchesMonthYear(r.target)
                                                 : MatchesRelative(r.target);
        ASSERT_TRUE(ok) << r.target;
        ASSERT_EQ(r.task, TaskForKind(k));
      }
    }
  }
}

TEST(Corpus, JobsDoNotChangeOutput) {
  DateCorpusConfig c;
  c.count = 5000;
  c.noise.level = 0.3;
  Corpus one = GenerateDateCorpus(c);
  c.jobs = 8;
  Corpus eight = GenerateDateCorpus(c);
  EXPECT_EQ(one.records, eight.records);
}

TEST(Corpus, RejectsBadRanges) {
  DateCorpusConfig c;
  c.count = 1;
  c.year_min = 2000;
  c.year_max = 1999;
  EXPECT_THROW(GenerateDateCorpus(c), Error);
  c.year_min = 999;
  c.year_max = 2000;
  EXPECT_THROW(GenerateDateCorpus(c), Error);
  c.year_min = 1921;
  c.count = -1;
  EXPECT_THROW(GenerateDateCorpus(c), Error);
}

TEST(Probes, BelowAndAbove) {
  DateCorpusConfig c;
  auto below = GenerateOutOfRangeProbes(c, ProbeSide::kBelow, 50);
  auto above = GenerateOutOfRangeProbes(c, ProbeSide::kAbove, 1);
  ASSERT_EQ(below.size(), 50u);
  ASSERT_EQ(above.size(), 1u);
  for (const Record &r : below) EXPECT_LE(*TargetYear(r.target), 1920);
  EXPECT_GE(*TargetYear(above[0].target), 2121);
}

TEST(Probes, UseOnlyTestFormats) {
  DateCorpusConfig c;
  c.count = 0;
  SplitManifest m = GenerateDateCorpus(c).manifest;
  for (ProbeSide side : {ProbeSide::kBelow, ProbeSide::kAbove}) {
    for (const Record &r : GenerateOutOfRangeProbes(c, side, 200)) {
      EXPECT_TRUE(m.IsTestFormat(r.format_id)) << r.format_id;
    }
  }
}

TEST(Probes, RelativeKindHasNoYear) {
  DateCorpusConfig c;
  c.kind = DateKind::kRelative;
  EXPECT_THROW(GenerateOutOfRangeProbes(c, ProbeSide::kBelow, 5), Error);
}

TEST(TargetYearTest, Forms) {
  EXPECT_EQ(TargetYear("15/01/2021"), 2021);
  EXPECT_EQ(TargetYear("07/1999"), 1999);
  EXPECT_FALSE(TargetYear("15/01"));
  EXPECT_FALSE(TargetYear("-100d"));
}

}  // namespace
}  // namespace normkit
