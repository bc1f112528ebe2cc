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

#ifndef NORMKIT_NORMALIZER_H_
#define NORMKIT_NORMALIZER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normkit/addresses.h"
#include "normkit/dates.h"
#include "normkit/record.h"

namespace normkit {

// kFuzzy means at least one token was repaired (confusion swap, edit,
// merge, abbreviation expansion) before the canonical form was built.
enum class Confidence { kExact, kFuzzy };

std::string_view ConfidenceName(Confidence confidence);

struct ParseOutcome {
  std::string canonical;
  Confidence confidence = Confidence::kExact;
  Task task = Task::kDateComplete;
};

// Throws Error(kUnparseable) when no consistent slot assignment exists and
// Error(kAmbiguousDate) when two assignments survive with no rule to pick
// one. Without a language the lexicon that recognizes more words is tried
// first, then the other.
ParseOutcome NormalizeDate(std::string_view text,
                           std::optional<Language> language = std::nullopt);

// The payload behind NormalizeDate's canonical string.
DatePayload ParseDate(std::string_view text,
                      std::optional<Language> language = std::nullopt,
                      Confidence *confidence = nullptr);

// Throws Error(kUnparseable) naming the slots that could not be resolved.
ParseOutcome NormalizeAddress(std::string_view text);
AddressFields ParseAddress(std::string_view text,
                           Confidence *confidence = nullptr);

inline constexpr std::string_view kDatePrefix = "data: ";
inline constexpr std::string_view kAddressPrefix = "endereco: ";

// Removes a leading "data:" / "endereco:" marker (any case, optional
// spaces after the colon) and reports which one it was.
std::string_view StripTaskPrefix(std::string_view text,
                                 std::optional<bool> *is_address = nullptr);

// A prefix is trusted when present. Otherwise address cues (UF codes,
// logradouro types, field labels, state names) win, then the date parser
// decides between the three date tasks. Throws Error(kUnknownTask).
Task Classify(std::string_view text,
              std::optional<Language> language = std::nullopt);

enum class TaskHint { kAuto, kDate, kAddress };

struct NormalizeOptions {
  TaskHint task = TaskHint::kAuto;
  std::optional<Language> language;
};

ParseOutcome Normalize(std::string_view text,
                       const NormalizeOptions &options = {});

}  // namespace normkit

#endif  // NORMKIT_NORMALIZER_H_
