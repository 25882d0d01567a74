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

#include "groupauth/random.h"

#include <string>

#include "groupauth/errors.h"

namespace groupauth {
namespace {

int HexDigit(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  return -1;
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32)};
  engine_.seed(seq);
}

Rng Rng::FromHex(std::string_view hex) {
  if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
    hex.remove_prefix(2);
  }
  if (hex.empty()) throw DomainError("empty hex seed");
  std::vector<std::uint32_t> words;
  words.push_back(static_cast<std::uint32_t>(hex.size()));
  for (char ch : hex) {
    int digit = HexDigit(ch);
    if (digit < 0) {
      throw DomainError("seed is not hexadecimal: '" + std::string(hex) + "'");
    }
    words.push_back(static_cast<std::uint32_t>(digit));
  }
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

Rng Rng::FromEntropy() {
  std::random_device device;
  std::seed_seq seq{device(), device(), device(), device(),
                    device(), device(), device(), device()};
  return Rng(seq);
}

std::uint64_t Rng::UniformBelow(std::uint64_t bound) {
  if (bound == 0) throw DomainError("UniformBelow: bound must be non-zero");
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = -bound % bound;
  for (;;) {
    std::uint64_t x = engine_();
    if (x >= limit) return x % bound;
  }
}

Nat Rng::UniformNat(const Nat& lo, const Nat& hi) {
  if (hi < lo) throw DomainError("UniformNat: empty range");
  const Nat span = hi - lo + 1;
  const unsigned bits = static_cast<unsigned>(msb(span)) + 1;
  const unsigned words = (bits + 63) / 64;
  const Nat mask = (Nat(1) << bits) - 1;
  for (;;) {
    Nat x = 0;
    for (unsigned i = 0; i < words; ++i) {
      x <<= 64;
      x += engine_();
    }
    x &= mask;
    if (x < span) return lo + x;
  }
}

}  // namespace groupauth
