// Copyright 2026 The gec-lab Authors
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

#ifndef GECLAB_RNG_HPP_
#define GECLAB_RNG_HPP_

#include <cmath>
#include <cstdint>

namespace geclab {

// Toolkit-wide deterministic generator: xoshiro256** seeded through a
// splitmix64 expansion of a 64-bit seed. Streams derived with split() are
// a pure function of (seed, index), never of draw order, so per-sentence
// streams can be consumed in any order (or in parallel) without changing
// outputs. All toolkit randomness goes through this type; std::mt19937 and
// friends are avoided because their distributions are not portable.
class Rng {
 public:
  static Rng seeded(uint64_t seed) { return Rng(seed); }

  // Derived stream `index` of this stream. Independent of any draws made
  // from *this.
  Rng split(uint64_t index) const { return Rng(mix(seed_, index)); }

  uint64_t next_u64() {
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Unbiased integer in [0, n). n must be > 0.
  uint64_t below(uint64_t n) {
    // Lemire's multiply-shift with rejection.
    __uint128_t m = static_cast<__uint128_t>(next_u64()) * n;
    auto lo = static_cast<uint64_t>(m);
    if (lo < n) {
      const uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        m = static_cast<__uint128_t>(next_u64()) * n;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next_unit() < p;
  }

  // Knuth's product-of-uniforms sampler; fine for the small means used here.
  uint64_t poisson(double lambda) {
    const double limit = std::exp(-lambda);
    uint64_t k = 0;
    double product = next_unit();
    while (product > limit) {
      ++k;
      product *= next_unit();
    }
    return k;
  }

 private:
  explicit Rng(uint64_t seed) : seed_(seed) {
    uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static uint64_t mix(uint64_t seed, uint64_t index) {
    uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL + index * 0xD1B54A32D192ED03ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint64_t seed_;
  uint64_t state_[4];
};

}  // namespace geclab

#endif  // GECLAB_RNG_HPP_
