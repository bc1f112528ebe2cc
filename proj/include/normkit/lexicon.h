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

#ifndef NORMKIT_LEXICON_H_
#define NORMKIT_LEXICON_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "normkit/record.h"

namespace normkit {

enum class Sign { kPast, kFuture };
enum class TimeUnit { kDay, kMonth, kYear };

// What a folded word means in date text.
enum class DateWordKind {
  kMonth,       // value = 1..12
  kPastCue,     // "há", "ago", ...
  kFutureCue,   // "daqui", "in", ...
  kUnit,        // value = TimeUnit
  kFiller,      // "de", "of", "the", "a", ...
};

struct DateWord {
  DateWordKind kind;
  int value = 0;
};

// Closed vocabularies for one language. Everything a shipped template can
// emit is resolvable here; lookups take folded text (see Fold()).
class DateLexicon {
 public:
  static const DateLexicon &For(Language language);

  Language language() const { return language_; }

  // Surface forms used by the renderer.
  const std::string &MonthName(int month) const;
  const std::string &MonthAbbreviation(int month) const;
  std::string UnitWord(TimeUnit unit, int magnitude) const;
  const std::string &SignWord(Sign sign) const;

  // All readings of a folded word. A word can be both a month and a number
  // ("dez"), which the caller resolves.
  std::vector<DateWord> Lookup(std::string_view folded) const;

  // Every folded entry of length >= 3, for fuzzy matching.
  const std::vector<std::string> &FuzzyCandidates() const {
    return fuzzy_candidates_;
  }

 private:
  explicit DateLexicon(Language language);
  void Add(std::string_view surface, DateWord word);

  Language language_;
  std::array<std::string, 12> month_names_;
  std::array<std::string, 12> month_abbrs_;
  std::array<std::pair<std::string, std::string>, 3> unit_words_;
  std::array<std::string, 2> sign_words_;
  std::vector<std::pair<std::string, DateWord>> entries_;
  std::vector<std::string> fuzzy_candidates_;
};

// The 27 Brazilian federative units, in the conventional alphabetical order
// of their codes.
struct StateInfo {
  std::string_view uf;
  std::string_view name;
};
const std::array<StateInfo, 27> &BrazilianStates();
bool IsUf(std::string_view code);
std::string_view StateName(std::string_view uf);
// Folded-name lookup ("sao paulo" -> "SP").
std::optional<std::string_view> UfForStateName(std::string_view name);

// Street type words that open a logradouro ("Rua", "Avenida", ...).
const std::vector<std::string> &LogradouroTypes();

// Full form <-> abbreviation pairs ("Avenida" <-> "Av."). Shared by the
// noise model and the address normalizer.
struct Abbreviation {
  std::string full;
  std::string abbreviated;
};
const std::vector<Abbreviation> &DefaultAbbreviations();

// Complement keywords ("apto", "bloco", "casa", "sala").
const std::vector<std::string> &ComplementKeywords();

}  // namespace normkit

#endif  // NORMKIT_LEXICON_H_
