// Copyright 2026 The Evorest Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVOREST_RNG_H_
#define EVOREST_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace evorest {

// Seeded random source. The standard distributions are implementation
// defined, so the helpers below derive values directly from the engine bits;
// a given seed produces the same stream with any standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform in [lo, hi]. Requires lo <= hi.
  int64_t UniformInt(int64_t lo, int64_t hi) {
    const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
    if (span == UINT64_MAX) return static_cast<int64_t>(NextU64());
    const uint64_t range = span + 1;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    uint64_t x;
    do {
      x = NextU64();
    } while (x >= limit);
    return static_cast<int64_t>(static_cast<uint64_t>(lo) + x % range);
  }

  // Uniform index in [0, n). Requires n > 0.
  size_t Index(size_t n) {
    return static_cast<size_t>(UniformInt(0, static_cast<int64_t>(n) - 1));
  }

  // Uniform in [0, 1).
  double UniformReal() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  double UniformReal(double lo, double hi) {
    return lo + (hi - lo) * UniformReal();
  }

  bool Bernoulli(double p) { return UniformReal() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace evorest

#endif  // EVOREST_RNG_H_
