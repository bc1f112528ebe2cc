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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "normkit/embedded_data.h"
#include "normkit/error.h"
#include "normkit/number_words.h"
#include "normkit/parallel.h"
#include "normkit/text.h"

namespace normkit {
namespace {

std::string Pad2(int v) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02d", v);
  return buf;
}

char UnitLetter(TimeUnit unit) {
  switch (unit) {
    case TimeUnit::kDay: return 'd';
    case TimeUnit::kMonth: return 'm';
    case TimeUnit::kYear: return 'a';
  }
  return '?';
}

struct TokenName {
  std::string_view name;
  DateToken token;
};

constexpr TokenName kTokenNames[] = {
    {"D", DateToken::kD},          {"DD", DateToken::kDD},
    {"DWORD", DateToken::kDWord},  {"DORD", DateToken::kDOrd},
    {"M", DateToken::kM},          {"MM", DateToken::kMM},
    {"MNAME", DateToken::kMName},  {"MABBR", DateToken::kMAbbr},
    {"YYYY", DateToken::kYYYY},    {"YWORD", DateToken::kYWord},
    {"N", DateToken::kN},          {"NWORD", DateToken::kNWord},
    {"UNITWORD", DateToken::kUnitWord},
    {"SIGNWORD", DateToken::kSignWord},
};

enum class Slot { kDay, kMonth, kYear, kMagnitude, kUnit, kSign };

Slot SlotOf(DateToken token) {
  switch (token) {
    case DateToken::kD: case DateToken::kDD: case DateToken::kDWord:
    case DateToken::kDOrd:
      return Slot::kDay;
    case DateToken::kM: case DateToken::kMM: case DateToken::kMName:
    case DateToken::kMAbbr:
      return Slot::kMonth;
    case DateToken::kYYYY: case DateToken::kYWord:
      return Slot::kYear;
    case DateToken::kN: case DateToken::kNWord:
      return Slot::kMagnitude;
    case DateToken::kUnitWord:
      return Slot::kUnit;
    case DateToken::kSignWord:
      return Slot::kSign;
  }
  return Slot::kDay;
}

std::set<Slot> RequiredSlots(DateKind kind, bool any_sign) {
  switch (kind) {
    case DateKind::kComplete: return {Slot::kDay, Slot::kMonth, Slot::kYear};
    case DateKind::kIncompleteDm: return {Slot::kDay, Slot::kMonth};
    case DateKind::kIncompleteMy: return {Slot::kMonth, Slot::kYear};
    case DateKind::kRelative:
      if (any_sign) return {Slot::kMagnitude, Slot::kUnit, Slot::kSign};
      return {Slot::kMagnitude, Slot::kUnit};
  }
  return {};
}

struct Slots {
  std::optional<int> day, month, year, magnitude;
  std::optional<TimeUnit> unit;
  std::optional<Sign> sign;
};

Slots SlotsOf(const DatePayload &payload) {
  Slots s;
  if (auto *d = std::get_if<CanonicalDate>(&payload)) {
    s.day = d->day;
    s.month = d->month;
    s.year = d->year;
  } else if (auto *p = std::get_if<PartialDate>(&payload)) {
    s.day = p->day;
    s.month = p->month;
    s.year = p->year;
  } else {
    const auto &r = std::get<RelativeDelta>(payload);
    s.magnitude = r.magnitude;
    s.unit = r.unit;
    s.sign = r.sign;
  }
  return s;
}

template <typename T>
const T &Need(const std::optional<T> &v, const DateFormatTemplate &format,
              std::string_view slot) {
  if (!v) {
    throw Error(ErrorCode::kUnsupportedSlot,
                "template " + format.id + " needs " + std::string(slot));
  }
  return *v;
}

std::optional<Sign> ParseSignField(std::string_view s) {
  if (s == "past") return Sign::kPast;
  if (s == "future") return Sign::kFuture;
  if (s == "any") return std::nullopt;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown sign '" + std::string(s) + "'");
}

int KindTag(DateKind kind) { return static_cast<int>(kind); }

}  // namespace

bool IsLeapYear(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int DaysInMonth(int month, int year) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30,
                                  31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) return 0;
  if (month == 2 && IsLeapYear(year)) return 29;
  return kDays[month - 1];
}

bool IsValid(const CanonicalDate &d) {
  return d.year >= 1000 && d.year <= 9999 && d.month >= 1 && d.month <= 12 &&
         d.day >= 1 && d.day <= DaysInMonth(d.month, d.year);
}

bool IsValid(const PartialDate &p) {
  if (p.month < 1 || p.month > 12) return false;
  if (p.kind == PartialKind::kDayMonth) {
    // Any leap year admits 29/02.
    return p.day && !p.year && *p.day >= 1 &&
           *p.day <= DaysInMonth(p.month, 2000);
  }
  return p.year && !p.day && *p.year >= 1000 && *p.year <= 9999;
}

bool IsValid(const RelativeDelta &r) { return r.magnitude >= 1; }

std::string CanonicalString(const CanonicalDate &d) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%02d/%02d/%04d", d.day, d.month, d.year);
  return buf;
}

std::string CanonicalString(const PartialDate &p) {
  if (p.kind == PartialKind::kDayMonth) {
    return Pad2(p.day.value_or(0)) + "/" + Pad2(p.month);
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%02d/%04d", p.month, p.year.value_or(0));
  return buf;
}

std::string CanonicalString(const RelativeDelta &r) {
  std::string out(1, r.sign == Sign::kPast ? '-' : '+');
  out += std::to_string(r.magnitude);
  out += UnitLetter(r.unit);
  return out;
}

std::string CanonicalString(const DatePayload &payload) {
  return std::visit([](const auto &p) { return CanonicalString(p); },
                    payload);
}

std::string_view DateKindName(DateKind kind) {
  switch (kind) {
    case DateKind::kComplete: return "complete";
    case DateKind::kIncompleteDm: return "incomplete_dm";
    case DateKind::kIncompleteMy: return "incomplete_my";
    case DateKind::kRelative: return "relative";
  }
  return "?";
}

DateKind ParseDateKind(std::string_view name) {
  std::string n(name);
  std::replace(n.begin(), n.end(), '-', '_');
  for (DateKind k : {DateKind::kComplete, DateKind::kIncompleteDm,
                     DateKind::kIncompleteMy, DateKind::kRelative}) {
    if (n == DateKindName(k)) return k;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown date kind '" + std::string(name) + "'");
}

Task TaskForKind(DateKind kind) {
  switch (kind) {
    case DateKind::kComplete: return Task::kDateComplete;
    case DateKind::kIncompleteDm:
    case DateKind::kIncompleteMy: return Task::kDateIncomplete;
    case DateKind::kRelative: return Task::kDateRelative;
  }
  return Task::kDateComplete;
}

DateFormatTemplate DateFormatTemplate::Parse(std::string id,
                                             Language language, DateKind kind,
                                             std::string text,
                                             std::string family,
                                             std::optional<Sign> sign) {
  DateFormatTemplate t;
  t.id = std::move(id);
  t.language = language;
  t.kind = kind;
  t.family = family.empty() ? t.id : std::move(family);
  t.sign = sign;
  t.text = std::move(text);

  auto fail = [&](const std::string &why) {
    return Error(ErrorCode::kInvalidArgument,
                 "template " + t.id + " (\"" + t.text + "\"): " + why);
  };

  std::set<Slot> seen;
  std::string literal;
  size_t i = 0;
  while (i < t.text.size()) {
    char c = t.text[i];
    if (c == '}') throw fail("unbalanced '}'");
    if (c != '{') {
      literal.push_back(c);
      ++i;
      continue;
    }
    size_t close = t.text.find('}', i);
    if (close == std::string::npos) throw fail("unterminated token");
    std::string_view name = std::string_view(t.text).substr(i + 1, close - i - 1);
    auto it = std::find_if(std::begin(kTokenNames), std::end(kTokenNames),
                           [&](const TokenName &n) { return n.name == name; });
    if (it == std::end(kTokenNames)) {
      throw fail("unknown token {" + std::string(name) + "}");
    }
    if (!seen.insert(SlotOf(it->token)).second) {
      throw fail("slot repeated by {" + std::string(name) + "}");
    }
    if (!literal.empty()) {
      t.pieces.push_back({std::nullopt, literal});
      literal.clear();
    }
    t.pieces.push_back({it->token, ""});
    i = close + 1;
  }
  if (!literal.empty()) t.pieces.push_back({std::nullopt, literal});

  if (kind != DateKind::kRelative && sign) {
    throw fail("only relative templates carry a sign");
  }
  std::set<Slot> required = RequiredSlots(kind, !sign.has_value());
  if (seen != required) {
    throw fail("slots do not match kind " + std::string(DateKindName(kind)));
  }
  return t;
}

bool DateFormatTemplate::Uses(DateToken token) const {
  return std::any_of(pieces.begin(), pieces.end(), [&](const TemplatePiece &p) {
    return p.token == token;
  });
}

std::string Render(const DatePayload &payload,
                   const DateFormatTemplate &format) {
  const DateLexicon &lex = DateLexicon::For(format.language);
  Slots s = SlotsOf(payload);
  if (format.sign && s.sign && *format.sign != *s.sign) {
    throw Error(ErrorCode::kUnsupportedSlot,
                "template " + format.id + " has a fixed sign");
  }
  std::string out;
  for (const TemplatePiece &piece : format.pieces) {
    if (!piece.token) {
      out += piece.literal;
      continue;
    }
    switch (*piece.token) {
      case DateToken::kD:
        out += std::to_string(Need(s.day, format, "day"));
        break;
      case DateToken::kDD:
        out += Pad2(Need(s.day, format, "day"));
        break;
      case DateToken::kDWord:
        out += CardinalWords(Need(s.day, format, "day"), format.language);
        break;
      case DateToken::kDOrd:
        out += OrdinalWords(Need(s.day, format, "day"), format.language);
        break;
      case DateToken::kM:
        out += std::to_string(Need(s.month, format, "month"));
        break;
      case DateToken::kMM:
        out += Pad2(Need(s.month, format, "month"));
        break;
      case DateToken::kMName:
        out += lex.MonthName(Need(s.month, format, "month"));
        break;
      case DateToken::kMAbbr:
        out += lex.MonthAbbreviation(Need(s.month, format, "month"));
        break;
      case DateToken::kYYYY:
        out += std::to_string(Need(s.year, format, "year"));
        break;
      case DateToken::kYWord:
        out += CardinalWords(Need(s.year, format, "year"), format.language);
        break;
      case DateToken::kN:
        out += std::to_string(Need(s.magnitude, format, "magnitude"));
        break;
      case DateToken::kNWord:
        out += CardinalWords(Need(s.magnitude, format, "magnitude"),
                             format.language);
        break;
      case DateToken::kUnitWord:
        out += lex.UnitWord(Need(s.unit, format, "unit"),
                            Need(s.magnitude, format, "magnitude"));
        break;
      case DateToken::kSignWord:
        out += lex.SignWord(Need(s.sign, format, "sign"));
        break;
    }
  }
  return out;
}

const DateInventory &DateInventory::Default() {
  static const DateInventory inventory = FromJson(EmbeddedDateFormats());
  return inventory;
}

DateInventory DateInventory::FromJson(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("date inventory: ") + e.what());
  }
  const nlohmann::json &list = j.is_array() ? j : j.at("formats");
  DateInventory inv;
  std::set<std::string> ids;
  for (const auto &f : list) {
    try {
      DateKind kind = ParseDateKind(f.at("kind").get<std::string>());
      std::optional<Sign> sign;
      if (kind == DateKind::kRelative) {
        sign = ParseSignField(f.value("sign", "any"));
      }
      DateFormatTemplate t = DateFormatTemplate::Parse(
          f.at("id").get<std::string>(),
          ParseLanguage(f.at("language").get<std::string>()), kind,
          f.at("template").get<std::string>(), f.value("family", ""), sign);
      if (!ids.insert(t.id).second) {
        throw Error(ErrorCode::kInvalidArgument, "duplicate id " + t.id);
      }
      inv.formats_.push_back(std::move(t));
    } catch (const nlohmann::json::exception &e) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("date inventory entry: ") + e.what());
    }
  }
  return inv;
}

DateInventory DateInventory::FromFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return FromJson(ss.str());
}

std::vector<const DateFormatTemplate *> DateInventory::Select(
    DateKind kind, Language language) const {
  std::vector<const DateFormatTemplate *> out;
  for (const auto &f : formats_) {
    if (f.kind == kind && f.language == language) out.push_back(&f);
  }
  return out;
}

const DateFormatTemplate *DateInventory::Find(std::string_view id) const {
  for (const auto &f : formats_) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

SplitPolicy DefaultSplit(DateKind kind) {
  if (kind == DateKind::kRelative) return {13, 5};
  return {34, 11};
}

SplitPolicy ParseSplitPolicy(std::string_view text) {
  auto parts = SplitString(text, ":");
  SplitPolicy p;
  try {
    if (parts.size() != 2) throw std::invalid_argument("shape");
    size_t a = 0, b = 0;
    p.train = std::stoi(parts[0], &a);
    p.test = std::stoi(parts[1], &b);
    if (a != parts[0].size() || b != parts[1].size()) {
      throw std::invalid_argument("trailing");
    }
  } catch (const std::exception &) {
    throw Error(ErrorCode::kInvalidArgument,
                "split must look like TRAIN:TEST, got '" + std::string(text) +
                    "'");
  }
  if (p.train < 0 || p.test < 0) {
    throw Error(ErrorCode::kInvalidArgument, "split counts must be >= 0");
  }
  return p;
}

FormatSplit SplitByFamily(const std::vector<std::string> &ids,
                          const std::vector<std::string> &families,
                          SplitPolicy policy, uint64_t seed, uint64_t tag) {
  std::vector<std::string> distinct;
  for (const auto &f : families) {
    if (std::find(distinct.begin(), distinct.end(), f) == distinct.end()) {
      distinct.push_back(f);
    }
  }
  size_t wanted = static_cast<size_t>(policy.train) +
                  static_cast<size_t>(policy.test);
  if (wanted > distinct.size()) {
    throw Error(ErrorCode::kInventoryTooSmall,
                "split " + std::to_string(policy.train) + ":" +
                    std::to_string(policy.test) + " needs " +
                    std::to_string(wanted) + " formats, inventory has " +
                    std::to_string(distinct.size()));
  }
  if (wanted < distinct.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "split " + std::to_string(policy.train) + ":" +
                    std::to_string(policy.test) + " leaves " +
                    std::to_string(distinct.size() - wanted) +
                    " formats unassigned");
  }
  RecordRng rng(seed, tag, Stream::kSplit);
  rng.Shuffle(std::span<std::string>(distinct));
  std::set<std::string> train(distinct.begin(),
                              distinct.begin() + policy.train);
  FormatSplit split;
  for (size_t i = 0; i < ids.size(); ++i) {
    (train.count(families[i]) ? split.train : split.test).push_back(ids[i]);
  }
  return split;
}

FormatSplit SplitFormats(const std::vector<const DateFormatTemplate *> &formats,
                         SplitPolicy policy, uint64_t seed) {
  std::vector<std::string> ids, families;
  for (const auto *f : formats) {
    ids.push_back(f->id);
    families.push_back(f->family);
  }
  uint64_t tag = formats.empty() ? 0 : KindTag(formats[0]->kind);
  return SplitByFamily(ids, families, policy, seed, tag);
}

int64_t DefaultCorpusSize(DateKind kind) {
  switch (kind) {
    case DateKind::kComplete: return kCompleteCorpusSize;
    case DateKind::kIncompleteDm: return kDayMonthCorpusSize;
    case DateKind::kIncompleteMy: return kMonthYearCorpusSize;
    case DateKind::kRelative: return kRelativeCorpusSizes[0];
  }
  return 0;
}

DatePayload SamplePayload(const DateFormatTemplate &format, int year_min,
                          int year_max, RecordRng &rng) {
  switch (format.kind) {
    case DateKind::kComplete: {
      CanonicalDate d;
      d.year = static_cast<int>(rng.Uniform(year_min, year_max));
      d.month = static_cast<int>(rng.Uniform(1, 12));
      d.day = static_cast<int>(rng.Uniform(1, DaysInMonth(d.month, d.year)));
      return d;
    }
    case DateKind::kIncompleteDm: {
      PartialDate p;
      p.kind = PartialKind::kDayMonth;
      p.month = static_cast<int>(rng.Uniform(1, 12));
      p.day = static_cast<int>(rng.Uniform(1, DaysInMonth(p.month, 2000)));
      return p;
    }
    case DateKind::kIncompleteMy: {
      PartialDate p;
      p.kind = PartialKind::kMonthYear;
      p.year = static_cast<int>(rng.Uniform(year_min, year_max));
      p.month = static_cast<int>(rng.Uniform(1, 12));
      return p;
    }
    case DateKind::kRelative: {
      RelativeDelta r;
      r.magnitude = static_cast<int>(rng.Uniform(1, kRelativeMagnitudeMax));
      r.unit = static_cast<TimeUnit>(rng.Uniform(0, 2));
      r.sign = format.sign ? *format.sign
                           : (rng.Uniform(0, 1) ? Sign::kFuture : Sign::kPast);
      return r;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown kind");
}

namespace {

void CheckRange(int year_min, int year_max) {
  if (year_min < 1000 || year_max > 9999) {
    throw Error(ErrorCode::kInvalidRange,
                "years must have 4 digits, got " + std::to_string(year_min) +
                    ".." + std::to_string(year_max));
  }
  if (year_min > year_max) {
    throw Error(ErrorCode::kInvalidRange,
                "year_min " + std::to_string(year_min) + " > year_max " +
                    std::to_string(year_max));
  }
}

std::string PolicyText(SplitPolicy p) {
  return std::to_string(p.train) + ":" + std::to_string(p.test);
}

bool HasYear(DateKind kind) {
  return kind == DateKind::kComplete || kind == DateKind::kIncompleteMy;
}

}  // namespace

Corpus GenerateDateCorpus(const DateCorpusConfig &config,
                          const DateInventory &inventory) {
  if (config.count < 0) {
    throw Error(ErrorCode::kInvalidArgument, "count must be >= 0");
  }
  CheckRange(config.year_min, config.year_max);
  config.noise.Validate();
  auto formats = inventory.Select(config.kind, config.language);
  SplitPolicy policy = config.split.value_or(DefaultSplit(config.kind));
  FormatSplit split = SplitFormats(formats, policy, config.seed);

  Corpus corpus;
  SplitManifest &m = corpus.manifest;
  m.train_formats = split.train;
  m.test_formats = split.test;
  m.seed = config.seed;
  m.kind = std::string(DateKindName(config.kind));
  m.language = std::string(LanguageName(config.language));
  if (HasYear(config.kind)) {
    m.year_min = config.year_min;
    m.year_max = config.year_max;
  }
  m.noise_level = config.noise.level;
  m.generator = {{"command", "gen dates"},
                 {"count", config.count},
                 {"split", PolicyText(policy)},
                 {"noise_seed", config.noise.seed},
                 {"ops_per_record", config.noise.ops_per_record}};

  corpus.records.resize(static_cast<size_t>(config.count));
  Task task = TaskForKind(config.kind);
  ParallelFor(corpus.records.size(), config.jobs, [&](size_t i) {
    RecordRng rng(config.seed, i, Stream::kPayload);
    const DateFormatTemplate &f =
        *formats[rng.Uniform(0, static_cast<int64_t>(formats.size()) - 1)];
    DatePayload payload = SamplePayload(f, config.year_min, config.year_max,
                                        rng);
    Record r;
    r.input = Render(payload, f);
    r.target = CanonicalString(payload);
    r.format_id = f.id;
    r.language = config.language;
    r.task = task;
    corpus.records[i] = Corrupt(r, i, config.noise);
  });
  return corpus;
}

std::vector<Record> GenerateOutOfRangeProbes(const DateCorpusConfig &config,
                                             ProbeSide side, int n,
                                             const DateInventory &inventory) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (!HasYear(config.kind)) {
    throw Error(ErrorCode::kInvalidArgument,
                "kind " + std::string(DateKindName(config.kind)) +
                    " has no year to probe");
  }
  CheckRange(config.year_min, config.year_max);
  int lo, hi;
  if (side == ProbeSide::kBelow) {
    lo = std::max(1000, config.year_min - 100);
    hi = config.year_min - 1;
  } else {
    lo = config.year_max + 1;
    hi = std::min(9999, config.year_max + 100);
  }
  if (lo > hi) {
    throw Error(ErrorCode::kInvalidRange, "no 4-digit years on that side");
  }
  auto formats = inventory.Select(config.kind, config.language);
  FormatSplit split = SplitFormats(
      formats, config.split.value_or(DefaultSplit(config.kind)), config.seed);
  std::vector<const DateFormatTemplate *> test;
  for (const auto &id : split.test) test.push_back(inventory.Find(id));
  if (test.empty()) {
    throw Error(ErrorCode::kInventoryTooSmall, "no test formats to probe");
  }

  // Probe indices live far past any corpus index so their draws never
  // coincide with corpus records.
  const uint64_t base = (side == ProbeSide::kBelow ? 1ULL : 2ULL) << 40;
  std::vector<Record> out(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    RecordRng rng(config.seed, base + j, Stream::kPayload);
    const DateFormatTemplate &f =
        *test[rng.Uniform(0, static_cast<int64_t>(test.size()) - 1)];
    DatePayload payload = SamplePayload(f, lo, hi, rng);
    Record &r = out[j];
    r.input = Render(payload, f);
    r.target = CanonicalString(payload);
    r.format_id = f.id;
    r.language = config.language;
    r.task = TaskForKind(config.kind);
  }
  return out;
}

std::optional<int> TargetYear(std::string_view canonical) {
  if (MatchesCompleteDate(canonical)) {
    return std::stoi(std::string(canonical.substr(6)));
  }
  if (MatchesMonthYear(canonical)) {
    return std::stoi(std::string(canonical.substr(3)));
  }
  return std::nullopt;
}

}  // namespace normkit
