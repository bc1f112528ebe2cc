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

#ifndef NORMKIT_DATES_H_
#define NORMKIT_DATES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "normkit/lexicon.h"
#include "normkit/noise.h"
#include "normkit/record.h"

namespace normkit {

struct CanonicalDate {
  int day = 1;
  int month = 1;
  int year = 2000;

  bool operator==(const CanonicalDate &) const = default;
};

enum class PartialKind { kDayMonth, kMonthYear };

struct PartialDate {
  PartialKind kind = PartialKind::kDayMonth;
  std::optional<int> day;
  int month = 1;
  std::optional<int> year;

  bool operator==(const PartialDate &) const = default;
};

struct RelativeDelta {
  Sign sign = Sign::kPast;
  int magnitude = 1;
  TimeUnit unit = TimeUnit::kDay;

  bool operator==(const RelativeDelta &) const = default;
};

using DatePayload = std::variant<CanonicalDate, PartialDate, RelativeDelta>;

bool IsLeapYear(int year);
int DaysInMonth(int month, int year);
bool IsValid(const CanonicalDate &date);
bool IsValid(const PartialDate &date);
bool IsValid(const RelativeDelta &delta);

// "DD/MM/AAAA", "DD/MM", "MM/AAAA" or "+Nd" / "-Nm" / ...
std::string CanonicalString(const CanonicalDate &date);
std::string CanonicalString(const PartialDate &date);
std::string CanonicalString(const RelativeDelta &delta);
std::string CanonicalString(const DatePayload &payload);

enum class DateKind { kComplete, kIncompleteDm, kIncompleteMy, kRelative };

// "complete", "incomplete_dm", "incomplete_my", "relative". Parsing also
// accepts the hyphenated CLI spellings.
std::string_view DateKindName(DateKind kind);
DateKind ParseDateKind(std::string_view name);
Task TaskForKind(DateKind kind);

// Template tokens. Everything outside braces is literal text.
//   {D} {DD}        day, unpadded / zero-padded
//   {DWORD} {DORD}  day as cardinal / ordinal words
//   {M} {MM}        month number, unpadded / zero-padded
//   {MNAME} {MABBR} month name / abbreviation from the language lexicon
//   {YYYY} {YWORD}  year as 4 digits / cardinal words
//   {N} {NWORD}     relative magnitude as digits / cardinal words
//   {UNITWORD}      unit word, singular iff magnitude == 1
//   {SIGNWORD}      pt "há" / "daqui a", en "ago" / "from now"
enum class DateToken {
  kD, kDD, kDWord, kDOrd,
  kM, kMM, kMName, kMAbbr,
  kYYYY, kYWord,
  kN, kNWord, kUnitWord, kSignWord,
};

struct TemplatePiece {
  std::optional<DateToken> token;  // nullopt for literal text
  std::string literal;
};

struct DateFormatTemplate {
  std::string id;
  Language language = Language::kPt;
  DateKind kind = DateKind::kComplete;
  // Split unit; templates sharing a family always land on the same side.
  std::string family;
  // Relative templates whose literal text fixes the direction. nullopt
  // means the template renders either sign (it carries {SIGNWORD}).
  std::optional<Sign> sign;
  std::string text;
  std::vector<TemplatePiece> pieces;

  // Throws Error(kInvalidArgument) for unknown tokens, repeated semantic
  // slots, or slots that do not fit `kind`.
  static DateFormatTemplate Parse(std::string id, Language language,
                                  DateKind kind, std::string text,
                                  std::string family = "",
                                  std::optional<Sign> sign = std::nullopt);

  bool Uses(DateToken token) const;
};

// Fills every slot of the template. Deterministic. Throws
// Error(kUnsupportedSlot) if the payload lacks a slot the template needs or
// the template's fixed sign contradicts the payload.
std::string Render(const DatePayload &payload,
                   const DateFormatTemplate &format);

class DateInventory {
 public:
  // The shipped inventory (data/date_formats.json).
  static const DateInventory &Default();
  static DateInventory FromJson(std::string_view json_text);
  static DateInventory FromFile(const std::string &path);

  const std::vector<DateFormatTemplate> &formats() const { return formats_; }
  std::vector<const DateFormatTemplate *> Select(DateKind kind,
                                                 Language language) const;
  const DateFormatTemplate *Find(std::string_view id) const;

 private:
  std::vector<DateFormatTemplate> formats_;
};

struct SplitPolicy {
  int train = 0;
  int test = 0;
};

// 34:11 for complete/incomplete inventories, 13:5 for relative families.
SplitPolicy DefaultSplit(DateKind kind);
// Parses "34:11".
SplitPolicy ParseSplitPolicy(std::string_view text);

struct FormatSplit {
  std::vector<std::string> train;
  std::vector<std::string> test;
};

// Shuffles the distinct families of `formats` with the seed and assigns the
// first policy.train families to train. The policy must cover every family
// exactly: Error(kInventoryTooSmall) if it asks for more families than
// exist, Error(kInvalidArgument) if it leaves some unassigned. Format ids
// keep inventory order within each side.
FormatSplit SplitFormats(const std::vector<const DateFormatTemplate *> &formats,
                         SplitPolicy policy, uint64_t seed);

// The same procedure over plain ids. families[i] is the family of ids[i];
// `tag` separates the shuffles of different inventories under one seed.
FormatSplit SplitByFamily(const std::vector<std::string> &ids,
                          const std::vector<std::string> &families,
                          SplitPolicy policy, uint64_t seed, uint64_t tag);

inline constexpr int kDefaultYearMin = 1921;
inline constexpr int kDefaultYearMax = 2120;
inline constexpr int kRelativeMagnitudeMax = 999;
inline constexpr int kDefaultProbeCount = 50;
// Default dataset sizes.
inline constexpr int64_t kCompleteCorpusSize = 73000;
inline constexpr int64_t kDayMonthCorpusSize = 2500;
inline constexpr int64_t kMonthYearCorpusSize = 7200;
inline constexpr std::array<int64_t, 3> kRelativeCorpusSizes = {1800, 4500,
                                                                9000};

int64_t DefaultCorpusSize(DateKind kind);

struct DateCorpusConfig {
  uint64_t seed = 7;
  int64_t count = 0;
  int year_min = kDefaultYearMin;
  int year_max = kDefaultYearMax;
  Language language = Language::kPt;
  DateKind kind = DateKind::kComplete;
  std::optional<SplitPolicy> split;  // DefaultSplit(kind) when unset
  NoiseConfig noise;                 // level 0 by default
  unsigned jobs = 1;
};

struct Corpus {
  std::vector<Record> records;
  SplitManifest manifest;
};

// Samples a payload for `format` uniformly from the valid space: uniform
// year, uniform month, uniform valid day; relative magnitudes uniform in
// [1, 999], units uniform, sign fixed by the template or uniform.
DatePayload SamplePayload(const DateFormatTemplate &format, int year_min,
                          int year_max, RecordRng &rng);

// Throws Error(kInvalidRange) if year_min > year_max or either bound is not
// a 4-digit year, Error(kInvalidArgument) for a negative count.
Corpus GenerateDateCorpus(const DateCorpusConfig &config,
                          const DateInventory &inventory =
                              DateInventory::Default());

enum class ProbeSide { kBelow, kAbove };

// n records whose years lie within 100 years outside [year_min, year_max],
// rendered only with the test-split formats of `config`. Only kinds that
// carry a year (complete, incomplete_my) can be probed.
std::vector<Record> GenerateOutOfRangeProbes(
    const DateCorpusConfig &config, ProbeSide side, int n,
    const DateInventory &inventory = DateInventory::Default());

// Extracts the year from a canonical target, if it has one.
std::optional<int> TargetYear(std::string_view canonical);

}  // namespace normkit

#endif  // NORMKIT_DATES_H_
