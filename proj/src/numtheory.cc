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

#include "groupauth/numtheory.h"

#include <array>
#include <cstdint>
#include <limits>

#include "groupauth/errors.h"
#include "groupauth/random.h"

namespace groupauth {

Nat ParseDecimal(std::string_view text) {
  if (text.empty()) throw DomainError("empty decimal string");
  Nat value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw DomainError("not a decimal integer: '" + std::string(text) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return value;
}

namespace nt {
namespace {

void RequireNonNegative(const Nat& value, const char* what) {
  if (value < 0) throw DomainError(std::string(what) + " must be non-negative");
}

constexpr std::array<unsigned, 12> kSmallPrimes = {2,  3,  5,  7,  11, 13,
                                                   17, 19, 23, 29, 31, 37};

// One Miller-Rabin round: n - 1 = d * 2^r with d odd.
bool PassesWitness(const Nat& n, const Nat& witness, const Nat& d,
                   unsigned r) {
  const Nat n_minus_1 = n - 1;
  Nat x = ModPow(witness, d, n);
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

Nat ModPow(const Nat& base, const Nat& exponent, const Nat& modulus) {
  RequireNonNegative(base, "base");
  RequireNonNegative(exponent, "exponent");
  if (modulus <= 0) throw DomainError("modulus must be positive");
  if (modulus == 1) return 0;
  return boost::multiprecision::powm(base, exponent, modulus);
}

Nat ModInverse(const Nat& a, const Nat& m) {
  RequireNonNegative(a, "a");
  if (m < 2) throw DomainError("modulus must be at least 2");
  // Extended Euclid on (a mod m, m), tracking only the coefficient of a.
  Nat old_r = a % m, r = m;
  Nat old_t = 1, t = 0;
  while (r != 0) {
    Nat q = old_r / r;
    Nat next_r = old_r - q * r;
    old_r = r;
    r = next_r;
    Nat next_t = old_t - q * t;
    old_t = t;
    t = next_t;
  }
  if (old_r != 1) throw NotInvertible("value is not invertible modulo m");
  Nat inverse = old_t % m;
  if (inverse < 0) inverse += m;
  return inverse;
}

Nat Gcd(const Nat& a, const Nat& b) {
  RequireNonNegative(a, "a");
  RequireNonNegative(b, "b");
  Nat x = a, y = b;
  while (y != 0) {
    Nat rem = x % y;
    x = y;
    y = rem;
  }
  return x;
}

bool IsProbablePrime(const Nat& n, int rounds) {
  if (rounds < 1) throw DomainError("rounds must be at least 1");
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }

  Nat d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }

  // The first twelve primes are a deterministic witness set for every
  // n < 3.3e24, which covers all of the 64-bit range.
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    for (unsigned p : kSmallPrimes) {
      if (!PassesWitness(n, p, d, r)) return false;
    }
    return true;
  }

  Rng rng(static_cast<std::uint64_t>(n & 0xffffffffffffffffULL));
  for (int i = 0; i < rounds; ++i) {
    Nat witness = rng.UniformNat(2, n - 2);
    if (!PassesWitness(n, witness, d, r)) return false;
  }
  return true;
}

Nat NextPrimeAbove(const Nat& x) {
  RequireNonNegative(x, "x");
  if (x < 2) return 2;
  Nat candidate = x + 1;
  if (candidate > 2 && (candidate & 1) == 0) ++candidate;
  while (!IsProbablePrime(candidate)) candidate += 2;
  return candidate;
}

std::vector<Nat> FirstNPrimes(std::size_t count) {
  std::vector<Nat> primes;
  primes.reserve(count);
  for (unsigned candidate = 2; primes.size() < count; ++candidate) {
    bool prime = true;
    for (const Nat& p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.emplace_back(candidate);
  }
  return primes;
}

Nat Product(const std::vector<Nat>& values) {
  Nat product = 1;
  for (const Nat& v : values) product *= v;
  return product;
}

}  // namespace nt
}  // namespace groupauth
