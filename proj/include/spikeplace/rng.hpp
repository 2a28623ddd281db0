/*
 * Copyright (c) 2026 The spikeplace authors
 *
 * Licensed under the Apache License, Version 2.0;
 * You may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an 'AS IS' BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <string_view>

namespace svpr {

// All randomness in the project goes through this generator. The standard
// <random> distributions are implementation-defined, so results would not be
// stable across toolchains; xoshiro256** with hand-rolled draws is.
inline uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Unbiased draw in [0, n), Lemire-style rejection.
  uint64_t uniform_below(uint64_t n) {
    if (n <= 1) return 0;
    const uint64_t threshold = (0 - n) % n;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // Inclusive bounds.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(
                    uniform_below(static_cast<uint64_t>(hi - lo) + 1));
  }

  // [0, 1) with 53 random bits.
  double uniform_real() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform_real();
  }

  bool bernoulli(double p) { return uniform_real() < p; }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

inline uint64_t hash_name(std::string_view name) {
  uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Seed derivation convention: everything flows from one top-level seed,
// salted by the consumer's name (module, stage) or an index.
inline uint64_t derive_seed(uint64_t base, std::string_view name) {
  uint64_t s = base ^ hash_name(name);
  return splitmix64(s);
}

inline uint64_t mix_seed(uint64_t base, uint64_t salt) {
  uint64_t s = base ^ (salt * 0x9e3779b97f4a7c15ull + 0x7f4a7c15ull);
  return splitmix64(s);
}

}  // namespace svpr
