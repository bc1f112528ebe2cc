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

#ifndef NORMKIT_ERROR_H_
#define NORMKIT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace normkit {

enum class ErrorCode {
  kInvalidArgument,
  kUnsupportedSlot,
  kInventoryTooSmall,
  kInvalidRange,
  kMalformedRow,
  kLookupFailure,
  kGazetteerEmpty,
  kLengthMismatch,
  kUnparseable,
  kAmbiguousDate,
  kUnknownTask,
  kBackendCrash,
  kProtocolViolation,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as Error. The code lets callers (the
// CLI in particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace normkit

#endif  // NORMKIT_ERROR_H_
