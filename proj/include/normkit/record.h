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

#ifndef NORMKIT_RECORD_H_
#define NORMKIT_RECORD_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace normkit {

inline constexpr std::string_view kToolVersion = "normkit 1.0.0";

enum class Language { kPt, kEn };

enum class Task { kDateComplete, kDateIncomplete, kDateRelative, kAddress };

std::string_view LanguageName(Language language);
Language ParseLanguage(std::string_view name);
std::string_view TaskName(Task task);
Task ParseTask(std::string_view name);

// One corpus example. The target is always clean canonical text; only the
// input is ever corrupted.
struct Record {
  std::string input;
  std::string target;
  std::string format_id;
  Language language = Language::kPt;
  Task task = Task::kDateComplete;
  bool noised = false;

  bool operator==(const Record &) const = default;
};

// Which format ids are train-only and which are test-only, plus everything
// needed to regenerate the corpus it accompanies.
struct SplitManifest {
  std::vector<std::string> train_formats;
  std::vector<std::string> test_formats;
  uint64_t seed = 0;
  std::string kind;
  std::string language;
  std::optional<int> year_min;
  std::optional<int> year_max;
  double noise_level = 0.0;
  std::optional<std::string> prefix_mode;
  // Free-form generator settings echoed for reproducibility.
  nlohmann::ordered_json generator = nlohmann::ordered_json::object();

  bool IsTestFormat(std::string_view id) const;
};

nlohmann::ordered_json RecordToJson(const Record &record);
Record RecordFromJson(const nlohmann::json &json);

std::string RecordToJsonLine(const Record &record);
void WriteJsonl(std::ostream &out, const std::vector<Record> &records);
// Throws Error(kIo) naming the 1-based line number of a malformed line.
std::vector<Record> ReadJsonl(std::istream &in);
std::vector<Record> ReadJsonlFile(const std::string &path);

// Spreadsheet-friendly export with the same columns as the JSONL.
void WriteCsv(std::ostream &out, const std::vector<Record> &records);

nlohmann::ordered_json ManifestToJson(const SplitManifest &manifest);
SplitManifest ManifestFromJson(const nlohmann::json &json);
SplitManifest ReadManifestFile(const std::string &path);
void WriteManifestFile(const std::string &path, const SplitManifest &manifest);

// Canonical grammars for the four date targets.
bool MatchesCompleteDate(std::string_view s);
bool MatchesDayMonth(std::string_view s);
bool MatchesMonthYear(std::string_view s);
bool MatchesRelative(std::string_view s);
// True iff exactly one of the date grammars matches.
bool MatchesDateGrammar(std::string_view s);

}  // namespace normkit

#endif  // NORMKIT_RECORD_H_
