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

#include "normkit/normalizer.h"

#include <algorithm>
#include <map>
#include <regex>

#include "normkit/error.h"
#include "normkit/lexicon.h"
#include "normkit/noise.h"
#include "normkit/number_words.h"
#include "normkit/text.h"

namespace normkit {
namespace {

// ---------------------------------------------------------------------------
// Date tokens.

enum class TokenKind { kDigits, kLetters, kMixed };

struct Token {
  std::string text;  // folded
  std::string sep;   // separator text before the token
  TokenKind kind = TokenKind::kLetters;
};

bool IsAlnum(char32_t c) { return IsAsciiDigit(c) || IsLetter(c); }

TokenKind KindOf(const std::string &text) {
  bool digits = false, letters = false;
  for (char32_t c : DecodeUtf8(text)) {
    (IsAsciiDigit(c) ? digits : letters) = true;
  }
  if (digits && letters) return TokenKind::kMixed;
  return digits ? TokenKind::kDigits : TokenKind::kLetters;
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> out;
  std::u32string sep, cur;
  for (char32_t c : DecodeUtf8(Fold(text))) {
    if (IsAlnum(c)) {
      cur.push_back(c);
      continue;
    }
    if (!cur.empty()) {
      out.push_back({EncodeUtf8(cur), EncodeUtf8(sep), TokenKind::kLetters});
      cur.clear();
      sep.clear();
    }
    sep.push_back(c);
  }
  if (!cur.empty()) {
    out.push_back({EncodeUtf8(cur), EncodeUtf8(sep), TokenKind::kLetters});
  }
  for (Token &t : out) t.kind = KindOf(t.text);
  return out;
}

// A separator breaks a number phrase unless it is blank, or a bare hyphen
// inside a compound like "twenty-one".
bool HardBoundary(const std::vector<Token> &tokens, size_t i) {
  if (i == 0) return true;
  const std::string &sep = tokens[i].sep;
  if (sep.find_first_not_of(' ') == std::string::npos) return false;
  return !(sep == "-" && tokens[i - 1].kind == TokenKind::kLetters &&
           tokens[i].kind == TokenKind::kLetters);
}

bool IsJoiner(std::string_view w, Language lang) {
  return w == (lang == Language::kPt ? "e" : "and");
}

bool Known(const std::string &w, const DateLexicon &lex) {
  return !lex.Lookup(w).empty() || IsNumberWord(w, lex.language()) ||
         IsJoiner(w, lex.language());
}

const std::vector<std::pair<char32_t, char32_t>> &ConfusionPairs() {
  static const auto pairs = NoiseConfig::Defaults().confusion_pairs;
  return pairs;
}

// What a repaired word would mean; two spellings with the same key are
// interchangeable.
std::string MeaningKey(const std::string &word, const DateLexicon &lex) {
  std::vector<DateWord> readings = lex.Lookup(word);
  if (!readings.empty()) {
    return std::to_string(static_cast<int>(readings.front().kind)) + ":" +
           std::to_string(readings.front().value);
  }
  return "w:" + word;
}

// Confusion swaps first, then a single generic edit. Gives up when the
// candidates disagree ("maço" is one edit from both "março" and "maio").
std::optional<std::string> RepairWord(const std::string &word,
                                      const DateLexicon &lex) {
  std::u32string cps = DecodeUtf8(word);
  auto unique = [&](const std::vector<std::string> &found)
      -> std::optional<std::string> {
    if (found.empty()) return std::nullopt;
    std::string key = MeaningKey(found.front(), lex);
    for (const std::string &f : found) {
      if (MeaningKey(f, lex) != key) return std::nullopt;
    }
    return found.front();
  };
  std::vector<std::string> found;
  for (size_t i = 0; i < cps.size(); ++i) {
    for (auto [a, b] : ConfusionPairs()) {
      char32_t partner = cps[i] == a ? b : cps[i] == b ? a : 0;
      if (partner == 0) continue;
      std::u32string trial = cps;
      trial[i] = FoldChar(partner);
      std::string s = EncodeUtf8(trial);
      if (Known(s, lex)) found.push_back(s);
    }
  }
  if (!found.empty()) return unique(found);
  if (cps.size() < 2) return std::nullopt;
  for (const std::string &cand : lex.FuzzyCandidates()) {
    if (EditDistance(DecodeUtf8(cand), cps) <= 1) found.push_back(cand);
  }
  return unique(found);
}

// Digits read as letters ("0utubro") or letters read as digits ("2o21"),
// plus one stray inserted character.
std::optional<std::string> RepairMixed(const std::string &word,
                                       const DateLexicon &lex) {
  std::u32string letters, digits;
  for (char32_t c : DecodeUtf8(word)) {
    if (IsAsciiDigit(c)) {
      if (c == '0') letters.push_back('o');
      if (c == '9') letters.push_back('g');
      digits.push_back(c);
    } else {
      if (c == 'o') digits.push_back('0');
      if (c == 'g') digits.push_back('9');
      letters.push_back(c);
    }
  }
  std::string l = EncodeUtf8(letters);
  if (Known(l, lex)) return l;
  if (l.size() >= 3) {
    if (auto fixed = RepairWord(l, lex)) return fixed;
  }
  if (!digits.empty()) return EncodeUtf8(digits);
  return std::nullopt;
}

// Rejoins words split by a stray space, then repairs misspellings.
std::vector<Token> Repair(std::vector<Token> tokens, const DateLexicon &lex,
                          bool &fuzzy) {
  for (size_t i = 0; i + 1 < tokens.size(); ++i) {
    Token &a = tokens[i];
    Token &b = tokens[i + 1];
    if (a.kind == TokenKind::kDigits || b.kind == TokenKind::kDigits) continue;
    if (b.sep != " ") continue;
    if (Known(a.text, lex) && Known(b.text, lex)) continue;
    std::string joined = a.text + b.text;
    if (!Known(joined, lex)) continue;
    a.text = joined;
    a.kind = TokenKind::kLetters;
    tokens.erase(tokens.begin() + static_cast<long>(i) + 1);
    fuzzy = true;
  }
  for (Token &t : tokens) {
    if (t.kind == TokenKind::kDigits || Known(t.text, lex)) continue;
    std::optional<std::string> fixed = t.kind == TokenKind::kMixed
                                           ? RepairMixed(t.text, lex)
                                           : RepairWord(t.text, lex);
    if (!fixed) continue;
    t.text = *fixed;
    t.kind = KindOf(t.text);
    fuzzy = true;
  }
  return tokens;
}

// ---------------------------------------------------------------------------
// Date items and slot assignment.

enum class ItemKind {
  kNumber, kMonth, kAmbiguous, kPastCue, kFutureCue, kUnit, kOther,
};

struct Item {
  ItemKind kind = ItemKind::kOther;
  int value = 0;        // number value, month, or unit
  int month = 0;        // month reading of kAmbiguous
  int digits = 0;       // 0 for number words
  bool ordinal = false;
};

// With `split_month_head`, a month word that opens a longer number phrase
// ("dez mil novecentos") is read as the month instead.
std::vector<Item> BuildItems(const std::vector<Token> &tokens,
                             const DateLexicon &lex,
                             bool split_month_head = false) {
  std::vector<Item> items;
  Language lang = lex.language();
  for (size_t i = 0; i < tokens.size();) {
    const Token &t = tokens[i];
    if (t.kind == TokenKind::kDigits) {
      Item it{ItemKind::kNumber};
      it.digits = static_cast<int>(t.text.size());
      it.value = it.digits <= 4 ? std::stoi(t.text) : -1;
      items.push_back(it);
      ++i;
      continue;
    }
    if (t.kind == TokenKind::kMixed) {
      items.push_back({});
      ++i;
      continue;
    }
    std::vector<std::string> window{t.text};
    for (size_t j = i + 1; j < tokens.size() && !HardBoundary(tokens, j) &&
                           tokens[j].kind == TokenKind::kLetters;
         ++j) {
      window.push_back(tokens[j].text);
    }
    std::vector<DateWord> readings = lex.Lookup(t.text);
    auto month_reading =
        std::find_if(readings.begin(), readings.end(), [](const DateWord &w) {
          return w.kind == DateWordKind::kMonth;
        });
    auto m = MatchNumberWords(window, 0, lang);
    if (m && split_month_head && m->consumed > 1 &&
        month_reading != readings.end()) {
      items.push_back({ItemKind::kMonth, month_reading->value});
      ++i;
      continue;
    }
    if (m) {
      Item it{ItemKind::kNumber, m->value};
      it.ordinal = m->ordinal;
      if (m->consumed == 1) {
        for (const DateWord &w : readings) {
          if (w.kind == DateWordKind::kMonth) {
            it.kind = ItemKind::kAmbiguous;
            it.month = w.value;
          }
        }
      }
      items.push_back(it);
      i += m->consumed;
      continue;
    }
    Item it;
    if (!readings.empty()) {
      const DateWord &w = readings.front();
      switch (w.kind) {
        case DateWordKind::kMonth: it = {ItemKind::kMonth, w.value}; break;
        case DateWordKind::kPastCue: it = {ItemKind::kPastCue}; break;
        case DateWordKind::kFutureCue: it = {ItemKind::kFutureCue}; break;
        case DateWordKind::kUnit: it = {ItemKind::kUnit, w.value}; break;
        case DateWordKind::kFiller: break;
      }
    }
    items.push_back(it);
    ++i;
  }
  return items;
}

std::optional<DatePayload> AssignRelative(const std::vector<Item> &items) {
  std::optional<int> magnitude;
  std::optional<int> unit;
  bool past = false;
  for (const Item &it : items) {
    switch (it.kind) {
      case ItemKind::kNumber:
      case ItemKind::kAmbiguous:
        if (magnitude || it.ordinal || it.value < 1) return std::nullopt;
        magnitude = it.value;
        break;
      case ItemKind::kUnit:
        if (unit && *unit != it.value) return std::nullopt;
        unit = it.value;
        break;
      case ItemKind::kPastCue:
        past = true;
        break;
      default:
        break;
    }
  }
  if (!magnitude || !unit) return std::nullopt;
  return RelativeDelta{past ? Sign::kPast : Sign::kFuture, *magnitude,
                       static_cast<TimeUnit>(*unit)};
}

std::optional<DatePayload> AssignAbsolute(const std::vector<Item> &items) {
  struct Num {
    int value;
    size_t pos;
    bool ordinal;
  };
  std::vector<Num> years, smalls;
  std::vector<int> months;
  for (size_t i = 0; i < items.size(); ++i) {
    const Item &it = items[i];
    if (it.kind == ItemKind::kMonth) {
      months.push_back(it.value);
    } else if (it.kind == ItemKind::kNumber) {
      bool word = it.digits == 0;
      if (!it.ordinal && ((word && it.value >= 1000 && it.value <= 9999) ||
                          it.digits == 4)) {
        years.push_back({it.value, i, false});
      } else if (it.value >= 1 && it.value <= 31 && (word || it.digits <= 2)) {
        smalls.push_back({it.value, i, it.ordinal});
      } else {
        return std::nullopt;
      }
    }
  }
  if (months.size() > 1 || years.size() > 1) return std::nullopt;

  std::optional<int> day, month, year;
  if (years.size() == 1) year = years[0].value;
  if (months.size() == 1) {
    if (smalls.size() > 1) return std::nullopt;
    month = months[0];
    if (smalls.size() == 1) day = smalls[0].value;
  } else {
    for (const Num &n : smalls) {
      if (n.ordinal) return std::nullopt;
    }
    if (smalls.size() == 2 && year) {
      size_t ypos = years[0].pos;
      if (ypos < smalls[0].pos) {
        month = smalls[0].value;
        day = smalls[1].value;
      } else if (ypos > smalls[1].pos) {
        day = smalls[0].value;
        month = smalls[1].value;
      } else {
        return std::nullopt;
      }
    } else if (smalls.size() == 2) {
      day = smalls[0].value;
      month = smalls[1].value;
    } else if (smalls.size() == 1 && year) {
      month = smalls[0].value;
    } else {
      return std::nullopt;
    }
  }
  if (!month || *month < 1 || *month > 12) return std::nullopt;
  if (day && year) {
    CanonicalDate d{*day, *month, *year};
    if (!IsValid(d)) return std::nullopt;
    return d;
  }
  if (day) {
    PartialDate p{PartialKind::kDayMonth, day, *month, std::nullopt};
    if (!IsValid(p)) return std::nullopt;
    return p;
  }
  if (year) {
    PartialDate p{PartialKind::kMonthYear, std::nullopt, *month, year};
    if (!IsValid(p)) return std::nullopt;
    return p;
  }
  return std::nullopt;
}

// Ambiguous tokens ("dez": month or ten) are tried both ways. Readings that
// use more month interpretations win.
DatePayload AssignSlots(const std::vector<Item> &items,
                        std::string_view text) {
  bool relative = std::any_of(items.begin(), items.end(), [](const Item &it) {
    return it.kind == ItemKind::kPastCue || it.kind == ItemKind::kFutureCue;
  });
  if (relative) {
    if (auto r = AssignRelative(items)) return *r;
    throw Error(ErrorCode::kUnparseable,
                "relative date needs one magnitude and one unit: '" +
                    std::string(text) + "'");
  }
  std::vector<size_t> ambiguous;
  for (size_t i = 0; i < items.size(); ++i) {
    if (items[i].kind == ItemKind::kAmbiguous) ambiguous.push_back(i);
  }
  if (ambiguous.size() > 4) {
    throw Error(ErrorCode::kUnparseable, "too many ambiguous words");
  }
  int best_months = -1;
  std::vector<DatePayload> best;
  for (unsigned mask = 0; mask < (1u << ambiguous.size()); ++mask) {
    std::vector<Item> trial = items;
    int as_month = 0;
    for (size_t k = 0; k < ambiguous.size(); ++k) {
      Item &it = trial[ambiguous[k]];
      if (mask & (1u << k)) {
        it = {ItemKind::kMonth, it.month};
        ++as_month;
      } else {
        it.kind = ItemKind::kNumber;
      }
    }
    auto payload = AssignAbsolute(trial);
    if (!payload || as_month < best_months) continue;
    if (as_month > best_months) {
      best_months = as_month;
      best.clear();
    }
    best.push_back(*payload);
  }
  if (best.empty()) {
    throw Error(ErrorCode::kUnparseable,
                "no consistent day/month/year assignment for '" +
                    std::string(text) + "'");
  }
  for (const DatePayload &p : best) {
    if (CanonicalString(p) != CanonicalString(best.front())) {
      throw Error(ErrorCode::kAmbiguousDate,
                  "'" + std::string(text) + "' reads as " +
                      CanonicalString(best.front()) + " or " +
                      CanonicalString(p));
    }
  }
  return best.front();
}

DatePayload ParseWith(std::string_view text, const DateLexicon &lex,
                      bool &fuzzy) {
  std::vector<Token> tokens = Repair(Tokenize(text), lex, fuzzy);
  try {
    return AssignSlots(BuildItems(tokens, lex), text);
  } catch (const Error &first) {
    if (first.code() != ErrorCode::kUnparseable) throw;
    try {
      return AssignSlots(BuildItems(tokens, lex, true), text);
    } catch (const Error &) {
    }
    // A stray space inside a number ("20 21").
    for (size_t i = 0; i + 1 < tokens.size(); ++i) {
      if (tokens[i].kind != TokenKind::kDigits ||
          tokens[i + 1].kind != TokenKind::kDigits ||
          tokens[i + 1].sep != " ") {
        continue;
      }
      std::vector<Token> merged = tokens;
      merged[i].text += merged[i + 1].text;
      merged.erase(merged.begin() + static_cast<long>(i) + 1);
      try {
        DatePayload p = AssignSlots(BuildItems(merged, lex), text);
        fuzzy = true;
        return p;
      } catch (const Error &) {
      }
    }
    throw;
  }
}

int KnownWordCount(std::string_view text, const DateLexicon &lex) {
  int n = 0;
  for (const Token &t : Tokenize(text)) {
    if (t.kind == TokenKind::kLetters && Known(t.text, lex)) ++n;
  }
  return n;
}

Task TaskOf(const DatePayload &p) {
  if (std::holds_alternative<CanonicalDate>(p)) return Task::kDateComplete;
  if (std::holds_alternative<PartialDate>(p)) return Task::kDateIncomplete;
  return Task::kDateRelative;
}

// ---------------------------------------------------------------------------
// Addresses.

std::string ExpandAbbreviations(std::string_view text, bool &fuzzy) {
  std::string out(text);
  for (const Abbreviation &a : DefaultAbbreviations()) {
    size_t pos = 0;
    while ((pos = out.find(a.abbreviated, pos)) != std::string::npos) {
      size_t end = pos + a.abbreviated.size();
      bool before_ok = pos == 0 || out[pos - 1] == ' ' || out[pos - 1] == ',' ||
                       out[pos - 1] == '(';
      bool after_ok = end == out.size() || out[end] == ' ' ||
                      out[end] == ',' || out[end] == ')';
      if (before_ok && after_ok) {
        out.replace(pos, a.abbreviated.size(), a.full);
        pos += a.full.size();
        fuzzy = true;
      } else {
        pos = end;
      }
    }
  }
  return out;
}

void PushSegment(std::vector<std::string> &out, std::string_view raw) {
  std::string s(Trim(raw));
  if (s.empty()) return;
  // "Campinas/SP", "Campinas-SP"
  static const std::regex kTrailingUf(R"(^(.*\S)\s*[/-]\s*([A-Z]{2})$)");
  std::smatch m;
  if (std::regex_match(s, m, kTrailingUf) && IsUf(m[2].str())) {
    out.push_back(m[1].str());
    out.push_back(m[2].str());
    return;
  }
  out.push_back(s);
}

std::vector<std::string> Segments(const std::string &text) {
  std::vector<std::string> out;
  for (const std::string &comma : SplitString(text, ",")) {
    for (const std::string &dash : SplitString(comma, " - ")) {
      std::string rest = dash;
      size_t open = rest.find('(');
      size_t close = rest.find(')', open == std::string::npos ? 0 : open);
      if (open != std::string::npos && close != std::string::npos) {
        PushSegment(out, rest.substr(0, open));
        PushSegment(out, rest.substr(open + 1, close - open - 1));
        PushSegment(out, rest.substr(close + 1));
      } else {
        PushSegment(out, rest);
      }
    }
  }
  return out;
}

enum class Field { kLogradouro, kNumero, kComplemento, kBairro, kCidade,
                   kEstado };

std::optional<Field> LabelField(std::string_view folded_label) {
  static const std::map<std::string, Field, std::less<>> kLabels = {
      {"logradouro", Field::kLogradouro}, {"numero", Field::kNumero},
      {"complemento", Field::kComplemento}, {"bairro", Field::kBairro},
      {"cidade", Field::kCidade}, {"estado", Field::kEstado},
      {"uf", Field::kEstado}};
  auto it = kLabels.find(folded_label);
  if (it != kLabels.end()) return it->second;
  for (const auto &[label, field] : kLabels) {
    if (label.size() >= 3 && folded_label.size() >= 3 &&
        EditDistance(label, folded_label) <= 1) {
      return field;
    }
  }
  return std::nullopt;
}

const std::regex &ComplementRe() {
  static const std::regex re(R"((apto \d+|bloco [A-Z]|casa \d+|sala \d+))");
  return re;
}

// "nº 12", "n. 12", "numero 12", "Número: 12", or a bare "12" / "s/n".
const std::regex &NumeroRe() {
  static const std::regex re(
      R"((?:(?:nº|Nº|n\.|N\.|numero|Numero|número|Número):?\s*)?(\d+|s/n))");
  return re;
}

struct NumeroTail {
  std::string numero;
  std::optional<std::string> complemento;
};

// Parses "<numero>[ <complemento>]" or "<complemento>" filling the whole
// segment.
std::optional<NumeroTail> MatchNumeroSegment(const std::string &s) {
  std::smatch m;
  static const std::regex full(
      R"(^((?:(?:nº|Nº|n\.|N\.|numero|Numero|número|Número):?\s*)?(?:\d+|s/n))(?:\s+-?\s*(apto \d+|bloco [A-Z]|casa \d+|sala \d+))?$)");
  if (!std::regex_match(s, m, full)) return std::nullopt;
  std::smatch n;
  std::string head = m[1].str();
  std::regex_search(head, n, NumeroRe());
  NumeroTail t{n[1].str(), std::nullopt};
  if (m[2].matched) t.complemento = m[2].str();
  return t;
}

// Splits "Rua X 100 apto 3" into logradouro and the trailing number parts.
std::pair<std::string, std::optional<NumeroTail>> SplitLogradouro(
    const std::string &s) {
  static const std::regex tail(
      R"(^(.*?\S)\s+((?:(?:nº|Nº|n\.|N\.|numero|Numero|número|Número):?\s*)?(?:\d+|s/n))(?:\s+(apto \d+|bloco [A-Z]|casa \d+|sala \d+))?$)");
  std::smatch m;
  if (std::regex_match(s, m, tail)) {
    std::string head = m[2].str();
    std::smatch n;
    std::regex_search(head, n, NumeroRe());
    NumeroTail t{n[1].str(), std::nullopt};
    if (m[3].matched) t.complemento = m[3].str();
    return {m[1].str(), t};
  }
  return {s, std::nullopt};
}

// Recognizes a leading logradouro type, repairing one edit when needed.
std::optional<std::string> FixLogradouroType(const std::string &s,
                                             bool allow_fuzzy, bool &fuzzy) {
  size_t space = s.find(' ');
  if (space == std::string::npos) return std::nullopt;
  std::string first = s.substr(0, space);
  std::string folded = Fold(first);
  for (const std::string &type : LogradouroTypes()) {
    if (Fold(type) == folded) return s;
  }
  // "Av Paulista": an abbreviation that lost its dot. Single letters are
  // too ambiguous.
  for (const Abbreviation &a : DefaultAbbreviations()) {
    const std::string &ab = a.abbreviated;
    if (ab.size() > 2 && ab.back() == '.' && ab.substr(0, ab.size() - 1) == first &&
        std::find(LogradouroTypes().begin(), LogradouroTypes().end(), a.full) !=
            LogradouroTypes().end()) {
      fuzzy = true;
      return a.full + s.substr(space);
    }
  }
  if (!allow_fuzzy || CodePointLength(first) < 3) return std::nullopt;
  for (const std::string &type : LogradouroTypes()) {
    if (EditDistance(Fold(type), folded) <= 1 && IsUpper(DecodeUtf8(first)[0])) {
      fuzzy = true;
      return type + s.substr(space);
    }
  }
  return std::nullopt;
}

struct AddressParse {
  std::optional<std::string> fields[6];
  bool fuzzy = false;
  int cues = 0;
  std::string unassigned;
};

AddressParse ParseAddressParts(std::string_view input) {
  AddressParse parse;
  auto &f = parse.fields;
  auto set = [&](Field field, std::string value) {
    auto &slot = f[static_cast<int>(field)];
    if (!slot) slot = std::move(value);
  };
  std::string text = ExpandAbbreviations(Trim(input), parse.fuzzy);
  std::vector<std::string> segs = Segments(text);

  enum class Kind { kResidual, kUf, kStateName, kDone };
  std::vector<Kind> kinds(segs.size(), Kind::kResidual);
  auto take_logradouro = [&](size_t i, const std::string &fixed) {
    ++parse.cues;
    kinds[i] = Kind::kDone;
    auto [name, tail] = SplitLogradouro(fixed);
    set(Field::kLogradouro, name);
    if (tail) {
      set(Field::kNumero, tail->numero);
      if (tail->complemento) set(Field::kComplemento, *tail->complemento);
    }
  };

  for (size_t i = 0; i < segs.size(); ++i) {
    const std::string &s = segs[i];
    size_t colon = s.find(':');
    if (colon != std::string::npos) {
      if (auto field = LabelField(Fold(Trim(s.substr(0, colon))))) {
        std::string value(Trim(s.substr(colon + 1)));
        ++parse.cues;
        kinds[i] = Kind::kDone;
        if (*field == Field::kEstado) {
          if (IsUf(value)) {
            set(Field::kEstado, value);
          } else if (auto uf = UfForStateName(value)) {
            set(Field::kEstado, std::string(*uf));
          }
        } else if (*field == Field::kNumero) {
          if (auto t = MatchNumeroSegment(value)) {
            set(Field::kNumero, t->numero);
            if (t->complemento) set(Field::kComplemento, *t->complemento);
          }
        } else if (*field == Field::kLogradouro) {
          set(Field::kLogradouro,
              FixLogradouroType(value, true, parse.fuzzy).value_or(value));
        } else {
          set(*field, value);
        }
        continue;
      }
    }
    if (s.size() == 2 && IsUf(s)) {
      kinds[i] = Kind::kUf;
      ++parse.cues;
      continue;
    }
    if (UfForStateName(s)) {
      kinds[i] = Kind::kStateName;
      continue;
    }
    if (auto fixed = FixLogradouroType(s, false, parse.fuzzy)) {
      take_logradouro(i, *fixed);
      continue;
    }
    if (auto t = MatchNumeroSegment(s)) {
      kinds[i] = Kind::kDone;
      set(Field::kNumero, t->numero);
      if (t->complemento) set(Field::kComplemento, *t->complemento);
      continue;
    }
    if (std::regex_match(s, ComplementRe())) {
      kinds[i] = Kind::kDone;
      set(Field::kComplemento, s);
      continue;
    }
  }

  // A misspelled type is only trusted when no segment has a correct one.
  // "Vila", "Lago" and "Belo" are each one edit from a type.
  if (!f[static_cast<int>(Field::kLogradouro)]) {
    std::optional<size_t> pick;
    std::string pick_text;
    for (size_t i = 0; i < segs.size(); ++i) {
      if (kinds[i] != Kind::kResidual) continue;
      bool unused = false;
      auto fixed = FixLogradouroType(segs[i], true, unused);
      if (!fixed) continue;
      bool has_tail = SplitLogradouro(*fixed).second.has_value();
      if (!pick || (has_tail && !SplitLogradouro(pick_text).second)) {
        pick = i;
        pick_text = *fixed;
      }
    }
    if (pick) {
      parse.fuzzy = true;
      take_logradouro(*pick, pick_text);
    }
  }

  // The estado segment: last UF code, else the last state name.
  std::optional<size_t> estado_at;
  for (size_t i = 0; i < segs.size(); ++i) {
    if (kinds[i] == Kind::kUf) estado_at = i;
  }
  if (!estado_at) {
    for (size_t i = 0; i < segs.size(); ++i) {
      if (kinds[i] == Kind::kStateName) estado_at = i;
    }
    if (estado_at) ++parse.cues;
  }
  if (estado_at) {
    const std::string &s = segs[*estado_at];
    set(Field::kEstado,
        kinds[*estado_at] == Kind::kUf ? s : std::string(*UfForStateName(s)));
    kinds[*estado_at] = Kind::kDone;
  }
  std::vector<size_t> residual;
  for (size_t i = 0; i < segs.size(); ++i) {
    if (kinds[i] != Kind::kDone) residual.push_back(i);
  }
  auto take = [&](size_t i) {
    auto it = std::find(residual.begin(), residual.end(), i);
    if (it == residual.end()) return false;
    residual.erase(it);
    return true;
  };
  if (!f[static_cast<int>(Field::kCidade)] && estado_at) {
    if (*estado_at > 0 && take(*estado_at - 1)) {
      set(Field::kCidade, segs[*estado_at - 1]);
    } else if (take(*estado_at + 1)) {
      set(Field::kCidade, segs[*estado_at + 1]);
    }
  }
  if (!f[static_cast<int>(Field::kBairro)] && residual.size() == 1) {
    set(Field::kBairro, segs[residual.front()]);
    residual.clear();
  }
  for (size_t i : residual) parse.unassigned += " '" + segs[i] + "'";
  return parse;
}

}  // namespace

std::string_view ConfidenceName(Confidence c) {
  return c == Confidence::kExact ? "exact" : "fuzzy";
}

DatePayload ParseDate(std::string_view text, std::optional<Language> language,
                      Confidence *confidence) {
  if (Trim(text).empty()) {
    throw Error(ErrorCode::kUnparseable, "empty date text");
  }
  // Canonical relative form ("+2m", "-100d") passes straight through.
  static const std::regex relative_re(R"(([+-])([1-9]\d{0,8})([dma]))");
  std::string trimmed(Trim(text));
  std::smatch rm;
  if (std::regex_match(trimmed, rm, relative_re)) {
    RelativeDelta d;
    d.sign = rm[1] == "+" ? Sign::kFuture : Sign::kPast;
    d.magnitude = std::stoi(rm[2]);
    char u = rm[3].str()[0];
    d.unit = u == 'd' ? TimeUnit::kDay : u == 'm' ? TimeUnit::kMonth : TimeUnit::kYear;
    if (confidence) *confidence = Confidence::kExact;
    return d;
  }
  std::vector<Language> order;
  if (language) {
    order = {*language};
  } else {
    const DateLexicon &pt = DateLexicon::For(Language::kPt);
    const DateLexicon &en = DateLexicon::For(Language::kEn);
    if (KnownWordCount(text, en) > KnownWordCount(text, pt)) {
      order = {Language::kEn, Language::kPt};
    } else {
      order = {Language::kPt, Language::kEn};
    }
  }
  std::optional<Error> first_error;
  for (Language lang : order) {
    bool fuzzy = false;
    try {
      DatePayload p = ParseWith(text, DateLexicon::For(lang), fuzzy);
      if (confidence) *confidence = fuzzy ? Confidence::kFuzzy : Confidence::kExact;
      return p;
    } catch (const Error &e) {
      if (!first_error) first_error = e;
    }
  }
  throw *first_error;
}

ParseOutcome NormalizeDate(std::string_view text,
                           std::optional<Language> language) {
  ParseOutcome out;
  DatePayload p = ParseDate(text, language, &out.confidence);
  out.canonical = CanonicalString(p);
  out.task = TaskOf(p);
  return out;
}

AddressFields ParseAddress(std::string_view text, Confidence *confidence) {
  if (Trim(text).empty()) {
    throw Error(ErrorCode::kUnparseable, "empty address text");
  }
  AddressParse parse = ParseAddressParts(text);
  if (!parse.unassigned.empty()) {
    throw Error(ErrorCode::kUnparseable,
                "unassigned address segments:" + parse.unassigned);
  }
  static constexpr const char *kNames[] = {"logradouro", "numero",
                                           "complemento", "bairro",
                                           "cidade", "estado"};
  std::string missing;
  for (int i : {0, 1, 3, 4, 5}) {
    if (!parse.fields[i] || parse.fields[i]->empty()) {
      missing += std::string(missing.empty() ? "" : ", ") + kNames[i];
    }
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kUnparseable, "address lacks " + missing);
  }
  AddressFields out;
  out.logradouro = *parse.fields[0];
  out.numero = *parse.fields[1];
  out.complemento = parse.fields[2];
  out.bairro = *parse.fields[3];
  out.cidade = *parse.fields[4];
  out.estado = *parse.fields[5];
  if (confidence) {
    *confidence = parse.fuzzy ? Confidence::kFuzzy : Confidence::kExact;
  }
  return out;
}

ParseOutcome NormalizeAddress(std::string_view text) {
  ParseOutcome out;
  out.canonical = CanonicalAddress(ParseAddress(text, &out.confidence));
  out.task = Task::kAddress;
  return out;
}

std::string_view StripTaskPrefix(std::string_view text,
                                 std::optional<bool> *is_address) {
  std::string_view t = Trim(text);
  for (auto [word, address] : {std::pair<std::string_view, bool>{"data", false},
                               {"endereco", true},
                               {"endereço", true}}) {
    if (t.size() > word.size() && Fold(t.substr(0, word.size())) == Fold(word) &&
        t[word.size()] == ':') {
      if (is_address) *is_address = address;
      return Trim(t.substr(word.size() + 1));
    }
  }
  if (is_address) *is_address = std::nullopt;
  return t;
}

namespace {

int AddressCues(std::string_view text) {
  return ParseAddressParts(text).cues;
}

}  // namespace

Task Classify(std::string_view text, std::optional<Language> language) {
  std::optional<bool> is_address;
  std::string_view body = StripTaskPrefix(text, &is_address);
  if (body.empty()) throw Error(ErrorCode::kUnknownTask, "empty input");
  if (is_address) {
    if (*is_address) return Task::kAddress;
    try {
      return NormalizeDate(body, language).task;
    } catch (const Error &) {
      return Task::kDateComplete;
    }
  }
  if (AddressCues(body) > 0) return Task::kAddress;
  try {
    return NormalizeDate(body, language).task;
  } catch (const Error &) {
  }
  throw Error(ErrorCode::kUnknownTask,
              "no date or address cue in '" + std::string(body) + "'");
}

ParseOutcome Normalize(std::string_view text, const NormalizeOptions &options) {
  std::optional<bool> is_address;
  std::string_view body = StripTaskPrefix(text, &is_address);
  TaskHint hint = options.task;
  if (hint == TaskHint::kAuto && is_address) {
    hint = *is_address ? TaskHint::kAddress : TaskHint::kDate;
  }
  if (hint == TaskHint::kAuto) {
    hint = AddressCues(body) > 0 ? TaskHint::kAddress : TaskHint::kDate;
  }
  if (hint == TaskHint::kAddress) return NormalizeAddress(body);
  return NormalizeDate(body, options.language);
}

}  // namespace normkit
