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

#include "normkit/number_words.h"

#include <array>
#include <map>
#include <stdexcept>

#include "normkit/error.h"

namespace normkit {
namespace {

constexpr std::array<const char *, 10> kPtUnits = {
    "zero", "um", "dois", "três", "quatro", "cinco", "seis", "sete", "oito",
    "nove"};
constexpr std::array<const char *, 10> kPtTeens = {
    "dez", "onze", "doze", "treze", "catorze", "quinze", "dezesseis",
    "dezessete", "dezoito", "dezenove"};
constexpr std::array<const char *, 10> kPtTens = {
    "", "", "vinte", "trinta", "quarenta", "cinquenta", "sessenta",
    "setenta", "oitenta", "noventa"};
constexpr std::array<const char *, 10> kPtHundreds = {
    "", "cento", "duzentos", "trezentos", "quatrocentos", "quinhentos",
    "seiscentos", "setecentos", "oitocentos", "novecentos"};
constexpr std::array<const char *, 10> kPtOrdinalUnits = {
    "", "primeiro", "segundo", "terceiro", "quarto", "quinto", "sexto",
    "sétimo", "oitavo", "nono"};
constexpr std::array<const char *, 10> kPtOrdinalTens = {
    "", "décimo", "vigésimo", "trigésimo", "quadragésimo", "quinquagésimo",
    "sexagésimo", "septuagésimo", "octogésimo", "nonagésimo"};

constexpr std::array<const char *, 10> kEnUnits = {
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine"};
constexpr std::array<const char *, 10> kEnTeens = {
    "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
    "seventeen", "eighteen", "nineteen"};
constexpr std::array<const char *, 10> kEnTens = {
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy",
    "eighty", "ninety"};
constexpr std::array<const char *, 20> kEnOrdinalSmall = {
    "", "first", "second", "third", "fourth", "fifth", "sixth", "seventh",
    "eighth", "ninth", "tenth", "eleventh", "twelfth", "thirteenth",
    "fourteenth", "fifteenth", "sixteenth", "seventeenth", "eighteenth",
    "nineteenth"};
constexpr std::array<const char *, 10> kEnOrdinalTens = {
    "", "", "twentieth", "thirtieth", "fortieth", "fiftieth", "sixtieth",
    "seventieth", "eightieth", "ninetieth"};

std::string PtBelow100(int n) {
  if (n < 10) return kPtUnits[n];
  if (n < 20) return kPtTeens[n - 10];
  std::string out = kPtTens[n / 10];
  if (n % 10) out += std::string(" e ") + kPtUnits[n % 10];
  return out;
}

std::string PtBelow1000(int n) {
  if (n == 100) return "cem";
  if (n < 100) return PtBelow100(n);
  std::string out = kPtHundreds[n / 100];
  if (n % 100) out += " e " + PtBelow100(n % 100);
  return out;
}

std::string EnBelow100(int n) {
  if (n < 10) return kEnUnits[n];
  if (n < 20) return kEnTeens[n - 10];
  std::string out = kEnTens[n / 10];
  if (n % 10) out += std::string("-") + kEnUnits[n % 10];
  return out;
}

std::string EnBelow1000(int n) {
  if (n < 100) return EnBelow100(n);
  std::string out = std::string(kEnUnits[n / 100]) + " hundred";
  if (n % 100) out += " " + EnBelow100(n % 100);
  return out;
}

enum class WordClass {
  kZero,
  kUnit,
  kTeen,
  kTens,
  kHundreds,      // pt "cento".."novecentos"
  kHundredExact,  // pt "cem"
  kHundredMul,    // en "hundred"
  kThousand,
  kJoiner,
  kOrdinalUnit,   // pt primeiro..nono, en first..nineteenth
  kOrdinalTens,   // pt décimo..; en twentieth, thirtieth
};

struct WordInfo {
  WordClass cls;
  int value;
};

using Vocabulary = std::map<std::string, WordInfo, std::less<>>;

Vocabulary BuildPt() {
  Vocabulary v;
  v["zero"] = {WordClass::kZero, 0};
  const char *units[] = {"um", "dois", "tres", "quatro", "cinco",
                         "seis", "sete", "oito", "nove"};
  for (int i = 0; i < 9; ++i) v[units[i]] = {WordClass::kUnit, i + 1};
  v["uma"] = {WordClass::kUnit, 1};
  v["duas"] = {WordClass::kUnit, 2};
  const char *teens[] = {"dez", "onze", "doze", "treze", "catorze",
                         "quinze", "dezesseis", "dezessete", "dezoito",
                         "dezenove"};
  for (int i = 0; i < 10; ++i) v[teens[i]] = {WordClass::kTeen, 10 + i};
  v["quatorze"] = {WordClass::kTeen, 14};
  v["dezasseis"] = {WordClass::kTeen, 16};
  v["dezassete"] = {WordClass::kTeen, 17};
  v["dezanove"] = {WordClass::kTeen, 19};
  const char *tens[] = {"vinte", "trinta", "quarenta", "cinquenta",
                        "sessenta", "setenta", "oitenta", "noventa"};
  for (int i = 0; i < 8; ++i) v[tens[i]] = {WordClass::kTens, (i + 2) * 10};
  const char *hundreds[] = {"cento", "duzentos", "trezentos",
                            "quatrocentos", "quinhentos", "seiscentos",
                            "setecentos", "oitocentos", "novecentos"};
  for (int i = 0; i < 9; ++i) {
    v[hundreds[i]] = {WordClass::kHundreds, (i + 1) * 100};
  }
  v["duzentas"] = {WordClass::kHundreds, 200};
  v["trezentas"] = {WordClass::kHundreds, 300};
  v["cem"] = {WordClass::kHundredExact, 100};
  v["mil"] = {WordClass::kThousand, 1000};
  v["e"] = {WordClass::kJoiner, 0};
  const char *ord_units[] = {"primeiro", "segundo", "terceiro", "quarto",
                             "quinto", "sexto", "setimo", "oitavo", "nono"};
  for (int i = 0; i < 9; ++i) v[ord_units[i]] = {WordClass::kOrdinalUnit, i + 1};
  v["primeira"] = {WordClass::kOrdinalUnit, 1};
  const char *ord_tens[] = {"decimo", "vigesimo", "trigesimo",
                            "quadragesimo", "quinquagesimo", "sexagesimo",
                            "septuagesimo", "octogesimo", "nonagesimo"};
  for (int i = 0; i < 9; ++i) {
    v[ord_tens[i]] = {WordClass::kOrdinalTens, (i + 1) * 10};
  }
  return v;
}

Vocabulary BuildEn() {
  Vocabulary v;
  v["zero"] = {WordClass::kZero, 0};
  for (int i = 1; i < 10; ++i) v[kEnUnits[i]] = {WordClass::kUnit, i};
  for (int i = 0; i < 10; ++i) v[kEnTeens[i]] = {WordClass::kTeen, 10 + i};
  for (int i = 2; i < 10; ++i) v[kEnTens[i]] = {WordClass::kTens, i * 10};
  v["hundred"] = {WordClass::kHundredMul, 100};
  v["thousand"] = {WordClass::kThousand, 1000};
  v["and"] = {WordClass::kJoiner, 0};
  for (int i = 1; i < 20; ++i) {
    v[kEnOrdinalSmall[i]] = {WordClass::kOrdinalUnit, i};
  }
  for (int i = 2; i < 10; ++i) {
    v[kEnOrdinalTens[i]] = {WordClass::kOrdinalTens, i * 10};
  }
  return v;
}

const Vocabulary &VocabularyFor(Language language) {
  static const Vocabulary pt = BuildPt();
  static const Vocabulary en = BuildEn();
  return language == Language::kPt ? pt : en;
}

const WordInfo *Lookup(std::string_view word, Language language) {
  const Vocabulary &v = VocabularyFor(language);
  auto it = v.find(word);
  return it == v.end() ? nullptr : &it->second;
}

// Incremental grammar state for one number.
struct Parser {
  Language language;
  int thousands = 0;
  int chunk = 0;
  bool have_thousand = false;
  bool ordinal = false;
  bool done = false;  // no further words allowed
  enum class Last { kNone, kHundred, kHundredExact, kTens, kTeen, kUnit,
                    kOrdinalTens } last = Last::kNone;
  bool any = false;

  // Applies the word if the grammar allows it; returns false otherwise and
  // leaves the state untouched.
  bool Accept(const WordInfo &w) {
    if (done) return false;
    switch (w.cls) {
      case WordClass::kZero:
        if (any) return false;
        done = true;
        break;
      case WordClass::kUnit:
        if (last != Last::kNone && last != Last::kHundred &&
            last != Last::kTens) {
          return false;
        }
        chunk += w.value;
        last = Last::kUnit;
        break;
      case WordClass::kTeen:
        if (last != Last::kNone && last != Last::kHundred) return false;
        chunk += w.value;
        last = Last::kTeen;
        break;
      case WordClass::kTens:
        if (last != Last::kNone && last != Last::kHundred) return false;
        chunk += w.value;
        last = Last::kTens;
        break;
      case WordClass::kHundreds:
        if (last != Last::kNone) return false;
        chunk += w.value;
        last = Last::kHundred;
        break;
      case WordClass::kHundredExact:
        if (last != Last::kNone) return false;
        chunk += 100;
        last = Last::kHundredExact;
        break;
      case WordClass::kHundredMul:
        if (last != Last::kUnit || chunk >= 10) return false;
        chunk *= 100;
        last = Last::kHundred;
        break;
      case WordClass::kThousand:
        if (have_thousand) return false;
        if (chunk == 0 && (language == Language::kEn || any)) return false;
        thousands = (chunk == 0 ? 1 : chunk) * 1000;
        chunk = 0;
        have_thousand = true;
        last = Last::kNone;
        break;
      case WordClass::kOrdinalTens:
        if (any) return false;
        chunk = w.value;
        ordinal = true;
        last = Last::kOrdinalTens;
        break;
      case WordClass::kOrdinalUnit: {
        if (have_thousand) return false;
        bool after_tens = last == Last::kOrdinalTens ||
                          (language == Language::kEn && last == Last::kTens &&
                           w.value < 10);
        if (any && !after_tens) return false;
        chunk += w.value;
        ordinal = true;
        done = true;
        break;
      }
      case WordClass::kJoiner:
        return false;
    }
    any = true;
    return true;
  }

  int Value() const { return thousands + chunk; }
};

}  // namespace

std::string CardinalWords(int n, Language language) {
  if (n < 0 || n > 9999) {
    throw Error(ErrorCode::kInvalidArgument,
                "number out of word range: " + std::to_string(n));
  }
  int thousands = n / 1000;
  int rest = n % 1000;
  if (language == Language::kPt) {
    if (thousands == 0) return PtBelow1000(rest);
    std::string out =
        thousands == 1 ? "mil" : PtBelow1000(thousands) + " mil";
    if (rest == 0) return out;
    // "dois mil e vinte", "dois mil e cem", but "dois mil cento e vinte".
    if (rest < 100 || rest % 100 == 0) return out + " e " + PtBelow1000(rest);
    return out + " " + PtBelow1000(rest);
  }
  if (thousands == 0) return EnBelow1000(rest);
  std::string out = EnBelow100(thousands) + " thousand";
  if (rest) out += " " + EnBelow1000(rest);
  return out;
}

std::string OrdinalWords(int n, Language language) {
  if (n < 1 || n > 99) {
    throw Error(ErrorCode::kInvalidArgument,
                "ordinal out of range: " + std::to_string(n));
  }
  if (language == Language::kPt) {
    std::string out;
    if (n >= 10) out = kPtOrdinalTens[n / 10];
    if (n % 10) {
      if (!out.empty()) out += " ";
      out += kPtOrdinalUnits[n % 10];
    }
    return out;
  }
  if (n < 20) return kEnOrdinalSmall[n];
  if (n % 10 == 0) return kEnOrdinalTens[n / 10];
  return std::string(kEnTens[n / 10]) + "-" + kEnOrdinalSmall[n % 10];
}

bool IsNumberWord(std::string_view folded, Language language) {
  return Lookup(folded, language) != nullptr;
}

const std::vector<std::string> &NumberWordVocabulary(Language language) {
  static const auto build = [](Language lang) {
    std::vector<std::string> words;
    for (const auto &[word, info] : VocabularyFor(lang)) {
      if (info.cls != WordClass::kJoiner) words.push_back(word);
    }
    return words;
  };
  static const std::vector<std::string> pt = build(Language::kPt);
  static const std::vector<std::string> en = build(Language::kEn);
  return language == Language::kPt ? pt : en;
}

std::optional<NumberWordsMatch> MatchNumberWords(
    std::span<const std::string> tokens, size_t start, Language language) {
  Parser parser{language};
  size_t i = start;
  size_t consumed = 0;
  while (i < tokens.size()) {
    const WordInfo *w = Lookup(tokens[i], language);
    if (w == nullptr) break;
    if (w->cls == WordClass::kJoiner) {
      // A joiner is only taken together with the word that follows it.
      if (!parser.any || i + 1 >= tokens.size()) break;
      const WordInfo *next = Lookup(tokens[i + 1], language);
      if (next == nullptr || next->cls == WordClass::kJoiner) break;
      Parser trial = parser;
      if (!trial.Accept(*next)) break;
      parser = trial;
      i += 2;
      consumed = i - start;
      continue;
    }
    if (!parser.Accept(*w)) break;
    ++i;
    consumed = i - start;
  }
  if (consumed == 0) return std::nullopt;
  return NumberWordsMatch{parser.Value(), consumed, parser.ordinal};
}

}  // namespace normkit
