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

#ifndef NORMKIT_NUMBER_WORDS_H_
#define NORMKIT_NUMBER_WORDS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normkit/record.h"

namespace normkit {

// Cardinal number in words, 0..9999.
//   pt: 2021 -> "dois mil e vinte e um", 123 -> "cento e vinte e três"
//   en: 2021 -> "two thousand twenty-one", 123 -> "one hundred twenty-three"
std::string CardinalWords(int n, Language language);

// Ordinal in words, 1..99 (days only need 1..31).
//   pt: 21 -> "vigésimo primeiro"; en: 21 -> "twenty-first"
std::string OrdinalWords(int n, Language language);

// True if the folded token belongs to the number-word vocabulary (including
// the joiners "e" / "and").
bool IsNumberWord(std::string_view folded, Language language);

// The folded number-word vocabulary, joiners excluded.
const std::vector<std::string> &NumberWordVocabulary(Language language);

struct NumberWordsMatch {
  int value = 0;
  size_t consumed = 0;
  bool ordinal = false;
};

// Longest well-formed number starting at tokens[start]. Tokens are folded
// (lower case, no diacritics) and must already be split on hyphens. Returns
// nullopt if tokens[start] does not begin a number. A trailing joiner is
// never consumed.
std::optional<NumberWordsMatch> MatchNumberWords(
    std::span<const std::string> tokens, size_t start, Language language);

}  // namespace normkit

#endif  // NORMKIT_NUMBER_WORDS_H_
