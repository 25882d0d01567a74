/*
 * Copyright 2026 The groupauth Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GROUPAUTH_RANDOM_H_
#define GROUPAUTH_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "groupauth/numtheory.h"

namespace groupauth {

// Seeded pseudo-random source. Every draw is derived from the raw 64-bit
// output of std::mt19937_64 (whose sequence is fixed by the standard), so a
// given seed produces the same values with any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0);

  // Seed from a hex string such as "00ff13". Throws DomainError on bad input.
  static Rng FromHex(std::string_view hex);
  static Rng FromEntropy();

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound). bound must be non-zero.
  std::uint64_t UniformBelow(std::uint64_t bound);

  // Uniform in [lo, hi], inclusive.
  Nat UniformNat(const Nat& lo, const Nat& hi);

  template <typename T>
  void Shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[UniformBelow(i)]);
    }
  }

 private:
  explicit Rng(std::seed_seq& seq) : engine_(seq) {}

  std::mt19937_64 engine_;
};

}  // namespace groupauth

#endif  // GROUPAUTH_RANDOM_H_
