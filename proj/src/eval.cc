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

#include "normkit/eval.h"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <map>
#include <sstream>

#include "normkit/dates.h"
#include "normkit/error.h"
#include "normkit/text.h"

namespace normkit {

bool ExactMatch(std::string_view prediction, std::string_view target) {
  if (!prediction.empty() && prediction.back() == '\n') {
    prediction.remove_suffix(1);
  }
  return prediction == target;
}

std::string_view BucketDimensionName(BucketDimension d) {
  switch (d) {
    case BucketDimension::kRange: return "range";
    case BucketDimension::kNoise: return "noise";
    case BucketDimension::kFormat: return "format";
  }
  return "?";
}

BucketDimension ParseBucketDimension(std::string_view name) {
  for (BucketDimension d : {BucketDimension::kRange, BucketDimension::kNoise,
                            BucketDimension::kFormat}) {
    if (name == BucketDimensionName(d)) return d;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown bucket '" + std::string(name) + "'");
}

std::string RangeBucket(const Record &record, const SplitManifest &manifest) {
  if (record.task == Task::kAddress) return "no_year";
  std::optional<int> year = TargetYear(record.target);
  if (!year || !manifest.year_min || !manifest.year_max) return "no_year";
  if (*year < *manifest.year_min) return "below_range";
  if (*year > *manifest.year_max) return "above_range";
  return "in_range";
}

std::string NoiseBucket(double level) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", level);
  return buf;
}

namespace {

std::string UtcNow() {
  std::time_t t = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Tally {
  int64_t n = 0;
  int64_t correct = 0;
  void Add(bool ok) {
    ++n;
    if (ok) ++correct;
  }
  double Accuracy() const {
    return n == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(n);
  }
};

}  // namespace

EvalReport Evaluate(Backend &backend, const std::vector<EvalCorpus> &corpora,
                    const EvalOptions &options) {
  EvalReport report;
  report.backend = backend.Id();
  report.timestamp = options.timestamp.empty() ? UtcNow() : options.timestamp;
  report.all_formats = options.all_formats;

  std::string hash_input;
  std::vector<const Record *> records;
  std::vector<const SplitManifest *> owner;
  for (const EvalCorpus &c : corpora) {
    report.seeds.push_back(c.manifest.seed);
    if (c.manifest.prefix_mode && !report.prefix_mode) {
      report.prefix_mode = c.manifest.prefix_mode;
    }
    hash_input += ManifestToJson(c.manifest).dump() + "\n";
    for (const Record &r : c.records) {
      hash_input += RecordToJsonLine(r) + "\n";
      if (options.all_formats || c.manifest.IsTestFormat(r.format_id)) {
        records.push_back(&r);
        owner.push_back(&c.manifest);
      }
    }
  }
  report.corpus_hash = Fnv1aHex(hash_input);

  BackendResult result = backend.Predict(records);
  report.timeouts = result.timeouts;
  if (result.failure) {
    report.status = *result.failure == ErrorCode::kProtocolViolation
                        ? "protocol_violation"
                        : "backend_crash";
    report.status_message = result.failure_message;
  }

  std::map<std::string, std::map<std::string, Tally>> dims;
  std::map<std::pair<std::string, std::string>, Tally> cells;
  Tally total;
  for (size_t i = 0; i < records.size(); ++i) {
    if (!result.settled[i]) continue;
    const Record &r = *records[i];
    bool ok = result.outputs[i] && ExactMatch(*result.outputs[i], r.target);
    total.Add(ok);
    std::string range = RangeBucket(r, *owner[i]);
    std::string noise = NoiseBucket(owner[i]->noise_level);
    for (BucketDimension d : options.dimensions) {
      std::string bucket = d == BucketDimension::kRange   ? range
                           : d == BucketDimension::kNoise ? noise
                                                          : r.format_id;
      dims[std::string(BucketDimensionName(d))][bucket].Add(ok);
    }
    cells[{noise, range}].Add(ok);
  }

  report.total = total.n;
  report.correct = total.correct;
  report.accuracy = total.Accuracy();
  for (BucketDimension d : options.dimensions) {
    std::string name(BucketDimensionName(d));
    for (const auto &[bucket, t] : dims[name]) {
      report.rows.push_back({name, bucket, t.n, t.correct, t.Accuracy()});
    }
  }
  for (const auto &[key, t] : cells) {
    report.table.push_back({key.first, key.second, t.n, t.correct,
                            t.Accuracy()});
  }
  return report;
}

nlohmann::ordered_json ReportToJson(const EvalReport &r) {
  nlohmann::ordered_json meta = {
      {"corpus_hash", r.corpus_hash},
      {"seed", r.seeds.empty() ? nlohmann::ordered_json(nullptr)
                               : nlohmann::ordered_json(r.seeds.front())},
      {"seeds", r.seeds},
      {"backend", r.backend},
      {"timestamp", r.timestamp},
      {"status", r.status},
      {"tool_version", kToolVersion},
      {"all_formats", r.all_formats},
      {"timeouts", r.timeouts}};
  if (!r.status_message.empty()) meta["status_message"] = r.status_message;
  if (r.prefix_mode) meta["prefix_mode"] = *r.prefix_mode;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const EvalRow &row : r.rows) {
    rows.push_back({{"dimension", row.dimension},
                    {"bucket", row.bucket},
                    {"n", row.n},
                    {"correct", row.correct},
                    {"accuracy", row.accuracy}});
  }
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const EvalCell &c : r.table) {
    table.push_back({{"noise_level", c.noise_level},
                     {"range", c.range},
                     {"n", c.n},
                     {"correct", c.correct},
                     {"accuracy", c.accuracy}});
  }
  return {{"metadata", meta},
          {"total", {{"n", r.total},
                     {"correct", r.correct},
                     {"accuracy", r.accuracy}}},
          {"rows", rows},
          {"table", table}};
}

std::string ReportToMarkdown(const EvalReport &r) {
  std::ostringstream out;
  char acc[32];
  auto fmt = [&](double a) {
    std::snprintf(acc, sizeof(acc), "%.4f", a);
    return std::string(acc);
  };
  out << "backend: " << r.backend << "  status: " << r.status
      << "  corpus: " << r.corpus_hash << "\n\n";
  out << "| noise | range | n | correct | accuracy |\n";
  out << "|------:|:------|--:|--------:|---------:|\n";
  for (const EvalCell &c : r.table) {
    out << "| " << c.noise_level << " | " << c.range << " | " << c.n << " | "
        << c.correct << " | " << fmt(c.accuracy) << " |\n";
  }
  out << "| all | all | " << r.total << " | " << r.correct << " | "
      << fmt(r.accuracy) << " |\n";
  bool has_format = false;
  for (const EvalRow &row : r.rows) has_format |= row.dimension == "format";
  if (has_format) {
    out << "\n| format | n | correct | accuracy |\n";
    out << "|:-------|--:|--------:|---------:|\n";
    for (const EvalRow &row : r.rows) {
      if (row.dimension != "format") continue;
      out << "| " << row.bucket << " | " << row.n << " | " << row.correct
          << " | " << fmt(row.accuracy) << " |\n";
    }
  }
  return out.str();
}

}  // namespace normkit
