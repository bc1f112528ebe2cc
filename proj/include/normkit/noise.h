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

#ifndef NORMKIT_NOISE_H_
#define NORMKIT_NOISE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "normkit/lexicon.h"
#include "normkit/record.h"
#include "normkit/rng.h"

namespace normkit {

// OCR-style corruption operators.
enum class NoiseOp {
  kSwapSimilar,  // replace one char by its confusion-table partner
  kDeleteChar,   // drop one char from a token of length >= 2
  kInsertChar,   // insert one char from [a-z0-9]
  kBreakWord,    // insert a space inside a word of length >= 4
  kAbbreviate,   // "Avenida" <-> "Av." (address records only)
};
inline constexpr std::array<NoiseOp, 5> kAllNoiseOps = {
    NoiseOp::kSwapSimilar, NoiseOp::kDeleteChar, NoiseOp::kInsertChar,
    NoiseOp::kBreakWord, NoiseOp::kAbbreviate};

std::string_view NoiseOpName(NoiseOp op);

struct NoiseConfig {
  // Probability that a record is corrupted.
  double level = 0.0;
  uint64_t seed = 7;
  int ops_per_record = 1;
  // Indexed by NoiseOp.
  std::array<double, 5> weights = {1, 1, 1, 1, 1};
  // Unordered pairs of lower-case characters.
  std::vector<std::pair<char32_t, char32_t>> confusion_pairs;
  std::vector<Abbreviation> abbreviations;

  // Shipped confusion and abbreviation tables.
  static NoiseConfig Defaults();
  // Replaces the tables with the ones in a JSON file shaped like
  // data/noise_tables.json.
  void LoadTables(const std::string &path);
  void LoadTablesFromJson(std::string_view json_text);
  // Throws Error(kInvalidArgument) on level outside [0, 1], negative
  // weights, no positive weight, or ops_per_record < 1.
  void Validate() const;
};

// Applies one operator. Returns nullopt when the operator has no eligible
// position in `input`.
std::optional<std::string> ApplyNoiseOp(NoiseOp op, std::string_view input,
                                         RecordRng &rng,
                                         const NoiseConfig &config);

// Corrupts record `index` of a corpus. With probability config.level the
// input is hit by ops_per_record operators; the target is never touched and
// noised is set iff the input changed.
Record Corrupt(const Record &record, uint64_t index, const NoiseConfig &config);

std::vector<Record> CorruptAll(const std::vector<Record> &records,
                               const NoiseConfig &config, unsigned jobs = 1);

// Fraction of aligned records whose input differs.
double MeasureNoise(const std::vector<Record> &before,
                    const std::vector<Record> &after);

}  // namespace normkit

#endif  // NORMKIT_NOISE_H_
