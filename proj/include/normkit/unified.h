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

#ifndef NORMKIT_UNIFIED_H_
#define NORMKIT_UNIFIED_H_

#include <cstdint>
#include <vector>

#include "normkit/addresses.h"
#include "normkit/dates.h"
#include "normkit/gazetteer.h"
#include "normkit/noise.h"

namespace normkit {

inline constexpr int64_t kUnifiedCorpusSize = 33039;
inline constexpr int kUnifiedValidationFormats = 48;

struct UnifiedConfig {
  uint64_t seed = 7;
  int64_t count = kUnifiedCorpusSize;
  double address_share = 0.5;
  bool prefix = false;
  int validation_formats = kUnifiedValidationFormats;
  int year_min = kDefaultYearMin;
  int year_max = kDefaultYearMax;
  NoiseConfig noise;
  unsigned jobs = 1;
};

// The pt date inventory (complete, both incomplete kinds, relative) plus
// the address templates, in that order.
std::vector<std::string> UnifiedFormatIds(
    const DateInventory &dates = DateInventory::Default(),
    const AddressInventory &addresses = AddressInventory::Default());

// Each record is an address with probability address_share, otherwise a
// date; the format is uniform within its task. The validation split is
// `validation_formats` ids drawn uniformly from all formats. Prefixes are
// added after noise so they are never corrupted.
Corpus BuildUnifiedCorpus(
    const UnifiedConfig &config,
    const std::vector<GazetteerEntry> &gazetteer = DefaultGazetteer(),
    const DateInventory &dates = DateInventory::Default(),
    const AddressInventory &addresses = AddressInventory::Default());

}  // namespace normkit

#endif  // NORMKIT_UNIFIED_H_
