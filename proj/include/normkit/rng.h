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

#ifndef NORMKIT_RNG_H_
#define NORMKIT_RNG_H_

#include <cstdint>
#include <random>
#include <span>

namespace normkit {

// Independent random streams per purpose so that, for example, changing the
// noise configuration never perturbs which payload a record gets.
enum class Stream : uint32_t {
  kSplit = 1,
  kPayload = 2,
  kNoiseGate = 3,
  kNoiseOps = 4,
  kTask = 5,
  kDecoration = 6,
};

// Deterministic generator for one (seed, index, stream) triple. Every
// randomized step in the library draws from one of these, so record i is a
// pure function of the configuration and i.
class RecordRng {
 public:
  RecordRng(uint64_t seed, uint64_t index, Stream stream);

  uint64_t Next() { return engine_(); }

  // Uniform integer in [lo, hi]. Portable across standard libraries.
  int64_t Uniform(int64_t lo, int64_t hi);

  // Uniform real in [0, 1) with 53 bits of precision.
  double UniformReal();

  bool Bernoulli(double p) { return UniformReal() < p; }

  // Index drawn proportionally to nonnegative weights; at least one weight
  // must be positive.
  size_t Weighted(std::span<const double> weights);

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(Uniform(0, static_cast<int64_t>(i) - 1));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace normkit

#endif  // NORMKIT_RNG_H_
