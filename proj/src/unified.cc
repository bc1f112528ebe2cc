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

#include "normkit/unified.h"

#include <algorithm>
#include <set>

#include "normkit/error.h"
#include "normkit/normalizer.h"
#include "normkit/parallel.h"

namespace normkit {
namespace {

constexpr DateKind kUnifiedKinds[] = {DateKind::kComplete,
                                      DateKind::kIncompleteDm,
                                      DateKind::kIncompleteMy,
                                      DateKind::kRelative};

std::vector<const DateFormatTemplate *> UnifiedDateFormats(
    const DateInventory &dates) {
  std::vector<const DateFormatTemplate *> out;
  for (DateKind kind : kUnifiedKinds) {
    auto part = dates.Select(kind, Language::kPt);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace

std::vector<std::string> UnifiedFormatIds(const DateInventory &dates,
                                          const AddressInventory &addresses) {
  std::vector<std::string> ids;
  for (const auto *f : UnifiedDateFormats(dates)) ids.push_back(f->id);
  for (const auto &f : addresses.formats()) ids.push_back(f.id);
  return ids;
}

Corpus BuildUnifiedCorpus(const UnifiedConfig &config,
                          const std::vector<GazetteerEntry> &gazetteer,
                          const DateInventory &dates,
                          const AddressInventory &addresses) {
  if (config.count < 0) {
    throw Error(ErrorCode::kInvalidArgument, "count must be >= 0");
  }
  if (config.address_share < 0 || config.address_share > 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "address share must lie in [0, 1]");
  }
  if (config.year_min < 1000 || config.year_max > 9999 ||
      config.year_min > config.year_max) {
    throw Error(ErrorCode::kInvalidRange, "bad year range");
  }
  config.noise.Validate();
  auto date_formats = UnifiedDateFormats(dates);
  const auto &address_formats = addresses.formats();
  if (config.address_share > 0 && gazetteer.empty()) {
    throw Error(ErrorCode::kGazetteerEmpty, "no gazetteer entries");
  }
  if ((config.address_share < 1 && date_formats.empty()) ||
      (config.address_share > 0 && address_formats.empty())) {
    throw Error(ErrorCode::kInventoryTooSmall, "empty inventory");
  }

  std::vector<std::string> ids = UnifiedFormatIds(dates, addresses);
  if (config.validation_formats < 0 ||
      static_cast<size_t>(config.validation_formats) > ids.size()) {
    throw Error(ErrorCode::kInventoryTooSmall,
                "validation split needs " +
                    std::to_string(config.validation_formats) +
                    " formats, inventory has " + std::to_string(ids.size()));
  }
  std::vector<std::string> shuffled = ids;
  RecordRng split_rng(config.seed, 200, Stream::kSplit);
  split_rng.Shuffle(std::span<std::string>(shuffled));
  std::set<std::string> validation(
      shuffled.begin(), shuffled.begin() + config.validation_formats);

  Corpus corpus;
  SplitManifest &m = corpus.manifest;
  for (const auto &id : ids) {
    (validation.count(id) ? m.test_formats : m.train_formats).push_back(id);
  }
  m.seed = config.seed;
  m.kind = "unified";
  m.language = "pt";
  m.year_min = config.year_min;
  m.year_max = config.year_max;
  m.noise_level = config.noise.level;
  m.prefix_mode = config.prefix ? "on" : "off";
  m.generator = {{"command", "gen unified"},
                 {"count", config.count},
                 {"address_share", config.address_share},
                 {"validation_formats", config.validation_formats},
                 {"date_prefix", kDatePrefix},
                 {"address_prefix", kAddressPrefix},
                 {"noise_seed", config.noise.seed},
                 {"ops_per_record", config.noise.ops_per_record}};

  AddressCorpusConfig address_config;
  address_config.seed = config.seed;
  corpus.records.resize(static_cast<size_t>(config.count));
  ParallelFor(corpus.records.size(), config.jobs, [&](size_t i) {
    RecordRng task_rng(config.seed, i, Stream::kTask);
    bool address = task_rng.Bernoulli(config.address_share);
    RecordRng rng(config.seed, i, Stream::kPayload);
    Record r;
    r.language = Language::kPt;
    if (address) {
      const AddressFormatTemplate &f = address_formats[rng.Uniform(
          0, static_cast<int64_t>(address_formats.size()) - 1)];
      AddressFields fields = SampleAddress(gazetteer, address_config, rng);
      RecordRng decoration(config.seed, i, Stream::kDecoration);
      r.input = RenderAddress(fields, f, decoration);
      r.target = CanonicalAddress(fields);
      r.format_id = f.id;
      r.task = Task::kAddress;
    } else {
      const DateFormatTemplate &f = *date_formats[rng.Uniform(
          0, static_cast<int64_t>(date_formats.size()) - 1)];
      DatePayload payload =
          SamplePayload(f, config.year_min, config.year_max, rng);
      r.input = Render(payload, f);
      r.target = CanonicalString(payload);
      r.format_id = f.id;
      r.task = TaskForKind(f.kind);
    }
    r = Corrupt(r, i, config.noise);
    if (config.prefix) {
      r.input = std::string(address ? kAddressPrefix : kDatePrefix) + r.input;
    }
    corpus.records[i] = std::move(r);
  });
  return corpus;
}

}  // namespace normkit
