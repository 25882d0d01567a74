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

// Naccache-Stern knapsack cryptosystem over the first n primes.
//
// A plaintext m < 2^n selects primes by its set bits (bit 0 is the smallest
// prime). Encryption multiplies the matching public values v_i; decryption
// raises the ciphertext to the secret exponent s, which turns every v_i back
// into its prime, and reads the bits off by trial division.

#ifndef GROUPAUTH_NSCRYPT_H_
#define GROUPAUTH_NSCRYPT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "groupauth/numtheory.h"
#include "groupauth/random.h"

namespace groupauth {

inline constexpr std::size_t kMinPrimeCount = 2;
inline constexpr std::size_t kMaxPrimeCount = 64;

struct PublicKey {
  Nat p;
  std::vector<Nat> v;

  std::size_t n() const { return v.size(); }
  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct PrivateKey {
  Nat p;
  Nat s;
  std::vector<Nat> primes;

  std::size_t n() const { return primes.size(); }
  friend bool operator==(const PrivateKey&, const PrivateKey&) = default;
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
};

// One prime of a share together with its bit position in the full system
// prime list.
struct IndexedPrime {
  std::size_t index = 0;
  Nat prime;

  friend bool operator==(const IndexedPrime&, const IndexedPrime&) = default;
};

using PrimeSubset = std::vector<IndexedPrime>;

// A holder's share of the private key: a subset of the system primes plus the
// full exponent s.
struct KeyShare {
  std::string holder;
  Nat p;
  Nat s;
  PrimeSubset primes;

  friend bool operator==(const KeyShare&, const KeyShare&) = default;
};

enum class PrimeStrategy {
  // p is the least prime above the product of the system primes.
  kDeterministicLeastPrime,
  // p is a random prime in (product, 2 * product).
  kSeededRandom,
};

struct KeygenOptions {
  std::size_t n = 12;
  PrimeStrategy strategy = PrimeStrategy::kDeterministicLeastPrime;
  // Overrides used to reproduce published key material bit-exactly.
  std::optional<Nat> force_p;
  std::optional<Nat> force_s;
};

// s is drawn from rng unless forced. Throws DomainError when n is out of
// [2, 64] or a forced value violates the key invariants.
KeyPair Keygen(const KeygenOptions& options, Rng& rng);

// Recomputes v_i = p_i^(s^-1 mod (p-1)) mod p.
PublicKey DerivePublicKey(const PrivateKey& priv);

// Checks every structural invariant, including v_i^s == p_i (mod p) when a
// public key is supplied. Throws DomainError naming the first violation.
void ValidatePrivateKey(const PrivateKey& priv);
void ValidatePublicKey(const PublicKey& pub);
void ValidateKeyPair(const PublicKey& pub, const PrivateKey& priv);

// 0 < m < 2^n, otherwise DomainError.
Nat Encrypt(const PublicKey& pub, const Nat& m);

// Throws DomainError if c is outside [1, p) and MalformedCiphertext if c^s
// mod p has a factor other than the system primes (or a repeated one).
Nat Decrypt(const PrivateKey& priv, const Nat& c);

// Bits of the plaintext attested by one share. Bit positions refer to the full
// prime list. Never throws on garbage ciphertexts in range.
Nat PartialDecrypt(const KeyShare& share, const Nat& c);

// The primes selected by the set bits of m.
std::vector<Nat> BitPrimes(const Nat& m, const std::vector<Nat>& primes);

}  // namespace groupauth

#endif  // GROUPAUTH_NSCRYPT_H_
