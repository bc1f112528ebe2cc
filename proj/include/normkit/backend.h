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

#ifndef NORMKIT_BACKEND_H_
#define NORMKIT_BACKEND_H_

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "normkit/error.h"
#include "normkit/record.h"

namespace normkit {

struct BackendResult {
  // Aligned with the request order. nullopt: no answer (timeout, or the
  // backend failed before answering).
  std::vector<std::optional<std::string>> outputs;
  // Set when every request was answered or timed out.
  std::vector<bool> settled;
  size_t timeouts = 0;
  // kBackendCrash or kProtocolViolation; outputs then hold what arrived.
  std::optional<ErrorCode> failure;
  std::string failure_message;
};

class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::string Id() const = 0;
  virtual BackendResult Predict(const std::vector<const Record *> &records) = 0;
};

// The baseline normalizer. Sees the record's input and its language tag,
// never its target or task.
class RulesBackend : public Backend {
 public:
  explicit RulesBackend(unsigned jobs = 1) : jobs_(jobs) {}
  std::string Id() const override { return "rules"; }
  BackendResult Predict(const std::vector<const Record *> &records) override;

 private:
  unsigned jobs_;
};

struct ProcessBackendConfig {
  std::string command;  // run through /bin/sh -c
  std::chrono::milliseconds timeout{30000};
  size_t max_in_flight = 32;
};

// Talks newline-delimited JSON to a child process:
//   request  {"id": <int>, "input": <string>}
//   response {"id": <int>, "output": <string>}
// Responses may come in any order. A request unanswered after `timeout`
// is scored wrong and its id retired; a late answer for it is ignored.
class ProcessBackend : public Backend {
 public:
  explicit ProcessBackend(ProcessBackendConfig config);
  std::string Id() const override { return "cmd:" + config_.command; }
  BackendResult Predict(const std::vector<const Record *> &records) override;

 private:
  ProcessBackendConfig config_;
};

}  // namespace normkit

#endif  // NORMKIT_BACKEND_H_
