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

#ifndef NORMKIT_EVAL_H_
#define NORMKIT_EVAL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "normkit/backend.h"
#include "normkit/record.h"

namespace normkit {

// Byte equality after removing at most one trailing "\n" from the
// prediction. Nothing else is normalized.
bool ExactMatch(std::string_view prediction, std::string_view target);

struct EvalCorpus {
  std::vector<Record> records;
  SplitManifest manifest;
};

enum class BucketDimension { kRange, kNoise, kFormat };
std::string_view BucketDimensionName(BucketDimension d);
BucketDimension ParseBucketDimension(std::string_view name);

struct EvalOptions {
  bool all_formats = false;
  std::vector<BucketDimension> dimensions = {
      BucketDimension::kRange, BucketDimension::kNoise,
      BucketDimension::kFormat};
  // Filled with the current UTC time when empty.
  std::string timestamp;
};

struct EvalRow {
  std::string dimension;  // "range", "noise", "format"
  std::string bucket;
  int64_t n = 0;
  int64_t correct = 0;
  double accuracy = 0.0;
};

// One cell of the noise level x range table.
struct EvalCell {
  std::string noise_level;
  std::string range;
  int64_t n = 0;
  int64_t correct = 0;
  double accuracy = 0.0;
};

struct EvalReport {
  std::string corpus_hash;
  std::vector<uint64_t> seeds;
  std::string backend;
  std::string timestamp;
  std::string status = "ok";  // ok | backend_crash | protocol_violation
  std::string status_message;
  std::optional<std::string> prefix_mode;
  bool all_formats = false;
  int64_t total = 0;
  int64_t correct = 0;
  double accuracy = 0.0;
  size_t timeouts = 0;
  std::vector<EvalRow> rows;
  std::vector<EvalCell> table;

  bool ok() const { return status == "ok"; }
};

// "in_range", "below_range", "above_range" for targets carrying a year,
// "no_year" otherwise.
std::string RangeBucket(const Record &record, const SplitManifest &manifest);
std::string NoiseBucket(double level);

// Scores the test-format records of every corpus (all records with
// all_formats). A failing backend yields a partial report over the records
// it settled, with status set accordingly.
EvalReport Evaluate(Backend &backend, const std::vector<EvalCorpus> &corpora,
                    const EvalOptions &options = {});

nlohmann::ordered_json ReportToJson(const EvalReport &report);
std::string ReportToMarkdown(const EvalReport &report);

}  // namespace normkit

#endif  // NORMKIT_EVAL_H_
