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

#include "normkit/rng.h"

#include <cassert>
#include <numeric>

namespace normkit {

RecordRng::RecordRng(uint64_t seed, uint64_t index, Stream stream) {
  std::seed_seq seq{static_cast<uint32_t>(seed),
                    static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(index),
                    static_cast<uint32_t>(index >> 32),
                    static_cast<uint32_t>(stream)};
  engine_.seed(seq);
}

int64_t RecordRng::Uniform(int64_t lo, int64_t hi) {
  assert(lo <= hi);
  uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<int64_t>(Next());
  // Reject the tail so every residue is equally likely.
  uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;
  uint64_t x;
  do {
    x = Next();
  } while (x > limit);
  return lo + static_cast<int64_t>(x % span);
}

double RecordRng::UniformReal() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

size_t RecordRng::Weighted(std::span<const double> weights) {
  double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  assert(total > 0);
  double x = UniformReal() * total;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) continue;
    if (x < weights[i]) return i;
    x -= weights[i];
  }
  for (size_t i = weights.size(); i > 0; --i) {
    if (weights[i - 1] > 0) return i - 1;
  }
  return 0;
}

}  // namespace normkit
