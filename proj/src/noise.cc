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

#include "normkit/noise.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "normkit/embedded_data.h"
#include "normkit/error.h"
#include "normkit/parallel.h"
#include "normkit/text.h"

namespace normkit {
namespace {

constexpr std::string_view kInsertAlphabet =
    "abcdefghijklmnopqrstuvwxyz0123456789";

bool IsSpace(char32_t c) { return c == ' ' || c == '\t' || c == '\n'; }

// [begin, end) code point ranges of maximal non-space runs.
std::vector<std::pair<size_t, size_t>> Words(const std::u32string &text) {
  std::vector<std::pair<size_t, size_t>> words;
  size_t i = 0;
  while (i < text.size()) {
    if (IsSpace(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && !IsSpace(text[j])) ++j;
    words.emplace_back(i, j);
    i = j;
  }
  return words;
}

std::optional<char32_t> ConfusionPartner(char32_t c,
                                         const NoiseConfig &config) {
  char32_t lower = ToLower(c);
  for (const auto &[a, b] : config.confusion_pairs) {
    char32_t partner;
    if (lower == a) {
      partner = b;
    } else if (lower == b) {
      partner = a;
    } else {
      continue;
    }
    return IsUpper(c) ? ToUpper(partner) : partner;
  }
  return std::nullopt;
}

std::optional<std::string> SwapSimilar(const std::u32string &text,
                                       RecordRng &rng,
                                       const NoiseConfig &config) {
  std::vector<size_t> eligible;
  for (size_t i = 0; i < text.size(); ++i) {
    if (ConfusionPartner(text[i], config)) eligible.push_back(i);
  }
  if (eligible.empty()) return std::nullopt;
  size_t pos = eligible[rng.Uniform(0, eligible.size() - 1)];
  std::u32string out = text;
  out[pos] = *ConfusionPartner(text[pos], config);
  return EncodeUtf8(out);
}

std::optional<std::string> DeleteChar(const std::u32string &text,
                                      RecordRng &rng) {
  std::vector<size_t> eligible;
  for (const auto &[b, e] : Words(text)) {
    if (e - b < 2) continue;
    for (size_t i = b; i < e; ++i) eligible.push_back(i);
  }
  if (eligible.empty()) return std::nullopt;
  size_t pos = eligible[rng.Uniform(0, eligible.size() - 1)];
  std::u32string out = text;
  out.erase(pos, 1);
  return EncodeUtf8(out);
}

std::optional<std::string> InsertChar(const std::u32string &text,
                                      RecordRng &rng) {
  size_t pos = rng.Uniform(0, text.size());
  char c = kInsertAlphabet[rng.Uniform(0, kInsertAlphabet.size() - 1)];
  std::u32string out = text;
  out.insert(out.begin() + pos, static_cast<char32_t>(c));
  return EncodeUtf8(out);
}

std::optional<std::string> BreakWord(const std::u32string &text,
                                     RecordRng &rng) {
  std::vector<std::pair<size_t, size_t>> eligible;
  for (const auto &w : Words(text)) {
    if (w.second - w.first >= 4) eligible.push_back(w);
  }
  if (eligible.empty()) return std::nullopt;
  auto [b, e] = eligible[rng.Uniform(0, eligible.size() - 1)];
  size_t pos = rng.Uniform(b + 1, e - 1);
  std::u32string out = text;
  out.insert(out.begin() + pos, U' ');
  return EncodeUtf8(out);
}

bool WordBoundaryBefore(std::string_view text, size_t pos) {
  if (pos == 0) return true;
  std::u32string prefix = DecodeUtf8(text.substr(0, pos));
  return prefix.empty() || !IsLetter(prefix.back());
}

bool WordBoundaryAfter(std::string_view text, size_t pos) {
  if (pos >= text.size()) return true;
  std::u32string rest = DecodeUtf8(text.substr(pos, 4));
  return rest.empty() || !IsLetter(rest.front());
}

std::optional<std::string> Abbreviate(std::string_view text, RecordRng &rng,
                                      const NoiseConfig &config) {
  struct Hit {
    size_t pos;
    size_t len;
    std::string replacement;
  };
  std::vector<Hit> hits;
  auto scan = [&](const std::string &from, const std::string &to) {
    size_t pos = 0;
    while ((pos = text.find(from, pos)) != std::string_view::npos) {
      bool ends_with_dot = !from.empty() && from.back() == '.';
      if (WordBoundaryBefore(text, pos) &&
          (ends_with_dot || WordBoundaryAfter(text, pos + from.size()))) {
        hits.push_back({pos, from.size(), to});
      }
      pos += from.size();
    }
  };
  for (const Abbreviation &a : config.abbreviations) {
    scan(a.full, a.abbreviated);
    scan(a.abbreviated, a.full);
  }
  if (hits.empty()) return std::nullopt;
  std::sort(hits.begin(), hits.end(),
            [](const Hit &x, const Hit &y) { return x.pos < y.pos; });
  const Hit &hit = hits[rng.Uniform(0, hits.size() - 1)];
  std::string out(text);
  out.replace(hit.pos, hit.len, hit.replacement);
  return out;
}

}  // namespace

std::string_view NoiseOpName(NoiseOp op) {
  switch (op) {
    case NoiseOp::kSwapSimilar: return "swap_similar";
    case NoiseOp::kDeleteChar: return "delete_char";
    case NoiseOp::kInsertChar: return "insert_char";
    case NoiseOp::kBreakWord: return "break_word";
    case NoiseOp::kAbbreviate: return "abbreviate";
  }
  return "";
}

NoiseConfig NoiseConfig::Defaults() {
  NoiseConfig config;
  config.LoadTablesFromJson(EmbeddedNoiseTables());
  return config;
}

void NoiseConfig::LoadTables(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  LoadTablesFromJson(buffer.str());
}

void NoiseConfig::LoadTablesFromJson(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("noise tables: ") + e.what());
  }
  confusion_pairs.clear();
  for (const auto &pair : doc.at("confusion_pairs")) {
    std::u32string a = DecodeUtf8(pair.at(0).get<std::string>());
    std::u32string b = DecodeUtf8(pair.at(1).get<std::string>());
    if (a.size() != 1 || b.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "confusion pairs must be single characters");
    }
    confusion_pairs.emplace_back(ToLower(a[0]), ToLower(b[0]));
  }
  abbreviations.clear();
  for (const auto &pair : doc.at("abbreviations")) {
    abbreviations.push_back(
        {pair.at(0).get<std::string>(), pair.at(1).get<std::string>()});
  }
}

void NoiseConfig::Validate() const {
  if (!(level >= 0.0 && level <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "noise level must be in [0, 1]");
  }
  if (ops_per_record < 1) {
    throw Error(ErrorCode::kInvalidArgument, "ops_per_record must be >= 1");
  }
  bool any_positive = false;
  for (double w : weights) {
    if (w < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "operator weights must be nonnegative");
    }
    any_positive |= w > 0;
  }
  if (!any_positive) {
    throw Error(ErrorCode::kInvalidArgument,
                "at least one operator weight must be positive");
  }
}

std::optional<std::string> ApplyNoiseOp(NoiseOp op, std::string_view input,
                                         RecordRng &rng,
                                         const NoiseConfig &config) {
  std::u32string text = DecodeUtf8(input);
  switch (op) {
    case NoiseOp::kSwapSimilar: return SwapSimilar(text, rng, config);
    case NoiseOp::kDeleteChar: return DeleteChar(text, rng);
    case NoiseOp::kInsertChar: return InsertChar(text, rng);
    case NoiseOp::kBreakWord: return BreakWord(text, rng);
    case NoiseOp::kAbbreviate: return Abbreviate(input, rng, config);
  }
  return std::nullopt;
}

Record Corrupt(const Record &record, uint64_t index,
               const NoiseConfig &config) {
  if (record.noised) {
    throw Error(ErrorCode::kInvalidArgument,
                "record " + std::to_string(index) + " is already noised");
  }
  Record out = record;
  RecordRng gate(config.seed, index, Stream::kNoiseGate);
  if (!gate.Bernoulli(config.level)) return out;

  RecordRng rng(config.seed, index, Stream::kNoiseOps);
  std::string text = record.input;
  for (int k = 0; k < config.ops_per_record; ++k) {
    std::array<double, 5> weights = config.weights;
    if (record.task != Task::kAddress) {
      weights[static_cast<size_t>(NoiseOp::kAbbreviate)] = 0;
    }
    while (true) {
      if (std::none_of(weights.begin(), weights.end(),
                       [](double w) { return w > 0; })) {
        break;
      }
      size_t pick = rng.Weighted(weights);
      auto result = ApplyNoiseOp(kAllNoiseOps[pick], text, rng, config);
      if (result) {
        text = std::move(*result);
        break;
      }
      weights[pick] = 0;  // no eligible position; resample
    }
  }
  out.input = std::move(text);
  out.noised = out.input != record.input;
  return out;
}

std::vector<Record> CorruptAll(const std::vector<Record> &records,
                               const NoiseConfig &config, unsigned jobs) {
  config.Validate();
  std::vector<Record> out(records.size());
  ParallelFor(records.size(), jobs,
              [&](size_t i) { out[i] = Corrupt(records[i], i, config); });
  return out;
}

double MeasureNoise(const std::vector<Record> &before,
                    const std::vector<Record> &after) {
  if (before.size() != after.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(before.size()) + " vs " +
                    std::to_string(after.size()) + " records");
  }
  if (before.empty()) return 0.0;
  size_t changed = 0;
  for (size_t i = 0; i < before.size(); ++i) {
    if (before[i].input != after[i].input) ++changed;
  }
  return static_cast<double>(changed) / static_cast<double>(before.size());
}

}  // namespace normkit
