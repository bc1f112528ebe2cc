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

#include "normkit/record.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>

#include "normkit/error.h"
#include "normkit/text.h"

namespace normkit {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view LanguageName(Language language) {
  return language == Language::kPt ? "pt" : "en";
}

Language ParseLanguage(std::string_view name) {
  if (name == "pt") return Language::kPt;
  if (name == "en") return Language::kEn;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown language '" + std::string(name) + "'");
}

std::string_view TaskName(Task task) {
  switch (task) {
    case Task::kDateComplete: return "date_complete";
    case Task::kDateIncomplete: return "date_incomplete";
    case Task::kDateRelative: return "date_relative";
    case Task::kAddress: return "address";
  }
  return "";
}

Task ParseTask(std::string_view name) {
  if (name == "date_complete") return Task::kDateComplete;
  if (name == "date_incomplete") return Task::kDateIncomplete;
  if (name == "date_relative") return Task::kDateRelative;
  if (name == "address") return Task::kAddress;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown task '" + std::string(name) + "'");
}

bool SplitManifest::IsTestFormat(std::string_view id) const {
  return std::find(test_formats.begin(), test_formats.end(), id) !=
         test_formats.end();
}

ordered_json RecordToJson(const Record &record) {
  ordered_json j;
  j["input"] = record.input;
  j["target"] = record.target;
  j["format_id"] = record.format_id;
  j["language"] = LanguageName(record.language);
  j["task"] = TaskName(record.task);
  j["noised"] = record.noised;
  return j;
}

Record RecordFromJson(const json &j) {
  Record r;
  r.input = j.at("input").get<std::string>();
  r.target = j.at("target").get<std::string>();
  r.format_id = j.at("format_id").get<std::string>();
  r.language = ParseLanguage(j.at("language").get<std::string>());
  r.task = ParseTask(j.at("task").get<std::string>());
  r.noised = j.at("noised").get<bool>();
  return r;
}

std::string RecordToJsonLine(const Record &record) {
  return RecordToJson(record).dump();
}

void WriteJsonl(std::ostream &out, const std::vector<Record> &records) {
  for (const Record &r : records) out << RecordToJsonLine(r) << '\n';
}

std::vector<Record> ReadJsonl(std::istream &in) {
  std::vector<Record> records;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      records.push_back(RecordFromJson(json::parse(line)));
    } catch (const std::exception &e) {
      throw Error(ErrorCode::kIo, "corpus line " + std::to_string(line_no) +
                                      ": " + e.what());
    }
  }
  return records;
}

std::vector<Record> ReadJsonlFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return ReadJsonl(in);
}

namespace {

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void WriteCsv(std::ostream &out, const std::vector<Record> &records) {
  out << "input,target,format_id,language,task,noised\n";
  for (const Record &r : records) {
    out << CsvField(r.input) << ',' << CsvField(r.target) << ','
        << CsvField(r.format_id) << ',' << LanguageName(r.language) << ','
        << TaskName(r.task) << ',' << (r.noised ? "true" : "false") << '\n';
  }
}

ordered_json ManifestToJson(const SplitManifest &m) {
  ordered_json j;
  j["train_formats"] = m.train_formats;
  j["test_formats"] = m.test_formats;
  j["seed"] = m.seed;
  j["kind"] = m.kind;
  j["language"] = m.language;
  if (m.year_min) j["year_min"] = *m.year_min;
  if (m.year_max) j["year_max"] = *m.year_max;
  j["noise_level"] = m.noise_level;
  if (m.prefix_mode) j["prefix_mode"] = *m.prefix_mode;
  j["generator"] = m.generator;
  j["tool_version"] = kToolVersion;
  return j;
}

SplitManifest ManifestFromJson(const json &j) {
  SplitManifest m;
  m.train_formats = j.at("train_formats").get<std::vector<std::string>>();
  m.test_formats = j.at("test_formats").get<std::vector<std::string>>();
  m.seed = j.at("seed").get<uint64_t>();
  m.kind = j.at("kind").get<std::string>();
  m.language = j.at("language").get<std::string>();
  if (j.contains("year_min")) m.year_min = j["year_min"].get<int>();
  if (j.contains("year_max")) m.year_max = j["year_max"].get<int>();
  if (j.contains("noise_level")) m.noise_level = j["noise_level"].get<double>();
  if (j.contains("prefix_mode")) {
    m.prefix_mode = j["prefix_mode"].get<std::string>();
  }
  if (j.contains("generator")) m.generator = j["generator"];
  return m;
}

SplitManifest ReadManifestFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  try {
    return ManifestFromJson(json::parse(in));
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kIo, "manifest " + path + ": " + e.what());
  }
}

void WriteManifestFile(const std::string &path, const SplitManifest &m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << ManifestToJson(m).dump(2) << '\n';
}

namespace {

int DaysIn(int month, int year) {
  static const int kDays[] = {31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && year >= 0) {
    bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    return leap ? 29 : 28;
  }
  return kDays[month - 1];
}

int Digits(std::string_view s, size_t pos, size_t n) {
  int v = 0;
  for (size_t i = pos; i < pos + n; ++i) v = v * 10 + (s[i] - '0');
  return v;
}

}  // namespace

bool MatchesCompleteDate(std::string_view s) {
  static const std::regex re(R"(\d{2}/\d{2}/\d{4})");
  if (!std::regex_match(s.begin(), s.end(), re)) return false;
  int d = Digits(s, 0, 2), m = Digits(s, 3, 2), y = Digits(s, 6, 4);
  return m >= 1 && m <= 12 && d >= 1 && d <= DaysIn(m, y);
}

bool MatchesDayMonth(std::string_view s) {
  static const std::regex re(R"(\d{2}/\d{2})");
  if (!std::regex_match(s.begin(), s.end(), re)) return false;
  int d = Digits(s, 0, 2), m = Digits(s, 3, 2);
  return m >= 1 && m <= 12 && d >= 1 && d <= DaysIn(m, -1);
}

bool MatchesMonthYear(std::string_view s) {
  static const std::regex re(R"(\d{2}/\d{4})");
  if (!std::regex_match(s.begin(), s.end(), re)) return false;
  int m = Digits(s, 0, 2);
  return m >= 1 && m <= 12;
}

bool MatchesRelative(std::string_view s) {
  static const std::regex re(R"([+-][1-9]\d*[dma])");
  return std::regex_match(s.begin(), s.end(), re);
}

bool MatchesDateGrammar(std::string_view s) {
  int n = MatchesCompleteDate(s) + MatchesDayMonth(s) + MatchesMonthYear(s) +
          MatchesRelative(s);
  return n == 1;
}

}  // namespace normkit
