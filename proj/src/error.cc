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

#include "normkit/error.h"

namespace normkit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnsupportedSlot: return "UnsupportedSlot";
    case ErrorCode::kInventoryTooSmall: return "InventoryTooSmall";
    case ErrorCode::kInvalidRange: return "InvalidRange";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kLookupFailure: return "LookupFailure";
    case ErrorCode::kGazetteerEmpty: return "GazetteerEmpty";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kUnparseable: return "Unparseable";
    case ErrorCode::kAmbiguousDate: return "AmbiguousDate";
    case ErrorCode::kUnknownTask: return "UnknownTask";
    case ErrorCode::kBackendCrash: return "BackendCrash";
    case ErrorCode::kProtocolViolation: return "ProtocolViolation";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace normkit
