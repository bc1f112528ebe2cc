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

#ifndef NORMKIT_CLI_H_
#define NORMKIT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "normkit/error.h"

namespace normkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitBackend = 3;

int ExitCodeFor(ErrorCode code);

// `args` excludes the program name.
int Main(const std::vector<std::string> &args, std::istream &in,
         std::ostream &out, std::ostream &err);

}  // namespace normkit::cli

#endif  // NORMKIT_CLI_H_
