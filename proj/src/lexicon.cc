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

#include "normkit/lexicon.h"

#include <algorithm>

#include "json.hpp"
#include "normkit/embedded_data.h"
#include "normkit/number_words.h"
#include "normkit/text.h"

namespace normkit {

const DateLexicon &DateLexicon::For(Language language) {
  static const DateLexicon pt(Language::kPt);
  static const DateLexicon en(Language::kEn);
  return language == Language::kPt ? pt : en;
}

DateLexicon::DateLexicon(Language language) : language_(language) {
  if (language == Language::kPt) {
    month_names_ = {"janeiro", "fevereiro", "março", "abril", "maio", "junho",
                    "julho", "agosto", "setembro", "outubro", "novembro",
                    "dezembro"};
    month_abbrs_ = {"jan", "fev", "mar", "abr", "mai", "jun",
                    "jul", "ago", "set", "out", "nov", "dez"};
    unit_words_ = {{{"dia", "dias"}, {"mês", "meses"}, {"ano", "anos"}}};
    sign_words_ = {"há", "daqui a"};
    for (const char *w : {"ha", "faz", "atras", "tras", "antes"}) {
      Add(w, {DateWordKind::kPastCue});
    }
    for (const char *w :
         {"daqui", "em", "dentro", "prazo", "frente", "depois", "tarde"}) {
      Add(w, {DateWordKind::kFutureCue});
    }
    for (const char *w : {"de", "do", "da", "a", "no", "para", "mais"}) {
      Add(w, {DateWordKind::kFiller});
    }
  } else {
    month_names_ = {"January", "February", "March", "April", "May", "June",
                    "July", "August", "September", "October", "November",
                    "December"};
    month_abbrs_ = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
    unit_words_ = {{{"day", "days"}, {"month", "months"}, {"year", "years"}}};
    sign_words_ = {"ago", "from now"};
    for (const char *w :
         {"ago", "back", "earlier", "past", "before", "previously"}) {
      Add(w, {DateWordKind::kPastCue});
    }
    for (const char *w :
         {"in", "within", "later", "time", "from", "ahead", "hence"}) {
      Add(w, {DateWordKind::kFutureCue});
    }
    for (const char *w : {"of", "the", "on", "now", "a"}) {
      Add(w, {DateWordKind::kFiller});
    }
    Add("sept", {DateWordKind::kMonth, 9});
  }
  for (int m = 0; m < 12; ++m) {
    Add(month_names_[m], {DateWordKind::kMonth, m + 1});
    Add(month_abbrs_[m], {DateWordKind::kMonth, m + 1});
  }
  for (int u = 0; u < 3; ++u) {
    Add(unit_words_[u].first, {DateWordKind::kUnit, u});
    Add(unit_words_[u].second, {DateWordKind::kUnit, u});
  }
  for (const auto &[word, info] : entries_) {
    if (word.size() >= 3) fuzzy_candidates_.push_back(word);
  }
  for (const std::string &w : NumberWordVocabulary(language)) {
    if (w.size() >= 3) fuzzy_candidates_.push_back(w);
  }
  std::sort(fuzzy_candidates_.begin(), fuzzy_candidates_.end());
  fuzzy_candidates_.erase(
      std::unique(fuzzy_candidates_.begin(), fuzzy_candidates_.end()),
      fuzzy_candidates_.end());
}

void DateLexicon::Add(std::string_view surface, DateWord word) {
  std::string folded = Fold(surface);
  for (const auto &[w, info] : entries_) {
    if (w == folded && info.kind == word.kind && info.value == word.value) {
      return;
    }
  }
  entries_.emplace_back(std::move(folded), word);
}

const std::string &DateLexicon::MonthName(int month) const {
  return month_names_.at(month - 1);
}

const std::string &DateLexicon::MonthAbbreviation(int month) const {
  return month_abbrs_.at(month - 1);
}

std::string DateLexicon::UnitWord(TimeUnit unit, int magnitude) const {
  const auto &forms = unit_words_.at(static_cast<int>(unit));
  return magnitude == 1 ? forms.first : forms.second;
}

const std::string &DateLexicon::SignWord(Sign sign) const {
  return sign_words_[sign == Sign::kPast ? 0 : 1];
}

std::vector<DateWord> DateLexicon::Lookup(std::string_view folded) const {
  std::vector<DateWord> out;
  for (const auto &[w, info] : entries_) {
    if (w == folded) out.push_back(info);
  }
  return out;
}

const std::array<StateInfo, 27> &BrazilianStates() {
  static const std::array<StateInfo, 27> states = {{
      {"AC", "Acre"},
      {"AL", "Alagoas"},
      {"AM", "Amazonas"},
      {"AP", "Amapá"},
      {"BA", "Bahia"},
      {"CE", "Ceará"},
      {"DF", "Distrito Federal"},
      {"ES", "Espírito Santo"},
      {"GO", "Goiás"},
      {"MA", "Maranhão"},
      {"MG", "Minas Gerais"},
      {"MS", "Mato Grosso do Sul"},
      {"MT", "Mato Grosso"},
      {"PA", "Pará"},
      {"PB", "Paraíba"},
      {"PE", "Pernambuco"},
      {"PI", "Piauí"},
      {"PR", "Paraná"},
      {"RJ", "Rio de Janeiro"},
      {"RN", "Rio Grande do Norte"},
      {"RO", "Rondônia"},
      {"RR", "Roraima"},
      {"RS", "Rio Grande do Sul"},
      {"SC", "Santa Catarina"},
      {"SE", "Sergipe"},
      {"SP", "São Paulo"},
      {"TO", "Tocantins"},
  }};
  return states;
}

bool IsUf(std::string_view code) {
  for (const StateInfo &s : BrazilianStates()) {
    if (s.uf == code) return true;
  }
  return false;
}

std::string_view StateName(std::string_view uf) {
  for (const StateInfo &s : BrazilianStates()) {
    if (s.uf == uf) return s.name;
  }
  return {};
}

std::optional<std::string_view> UfForStateName(std::string_view name) {
  std::string folded = Fold(name);
  for (const StateInfo &s : BrazilianStates()) {
    if (Fold(s.name) == folded) return s.uf;
  }
  return std::nullopt;
}

const std::vector<std::string> &LogradouroTypes() {
  static const std::vector<std::string> types = {
      "Rua",   "Avenida", "Travessa", "Alameda", "Praça", "Estrada",
      "Rodovia", "Largo", "Ladeira", "Beco",   "Viela", "Servidão"};
  return types;
}

const std::vector<Abbreviation> &DefaultAbbreviations() {
  static const std::vector<Abbreviation> table = [] {
    std::vector<Abbreviation> out;
    auto doc = nlohmann::json::parse(EmbeddedNoiseTables());
    for (const auto &pair : doc.at("abbreviations")) {
      out.push_back({pair.at(0).get<std::string>(),
                     pair.at(1).get<std::string>()});
    }
    return out;
  }();
  return table;
}

const std::vector<std::string> &ComplementKeywords() {
  static const std::vector<std::string> words = {"apto", "bloco", "casa",
                                                 "sala"};
  return words;
}

}  // namespace normkit
