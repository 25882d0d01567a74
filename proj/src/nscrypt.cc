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

#include "groupauth/nscrypt.h"

#include <string>

#include "groupauth/errors.h"

namespace groupauth {
namespace {

std::string Str(const Nat& value) { return value.str(); }

void CheckPrimeCount(std::size_t n) {
  if (n < kMinPrimeCount || n > kMaxPrimeCount) {
    throw DomainError("prime count must be in [2, 64], got " +
                      std::to_string(n));
  }
}

void CheckCiphertextRange(const Nat& p, const Nat& c) {
  if (c < 1 || c >= p) {
    throw DomainError("ciphertext " + Str(c) + " outside [1, p)");
  }
}

Nat PublicValue(const Nat& prime, const Nat& s_inverse, const Nat& p) {
  return nt::ModPow(prime, s_inverse, p);
}

Nat DrawExponent(const Nat& p, Rng& rng) {
  const Nat order = p - 1;
  for (;;) {
    Nat s = rng.UniformNat(2, p - 2);
    if (nt::Gcd(s, order) == 1) return s;
  }
}

}  // namespace

KeyPair Keygen(const KeygenOptions& options, Rng& rng) {
  CheckPrimeCount(options.n);
  PrivateKey priv;
  priv.primes = nt::FirstNPrimes(options.n);
  const Nat product = nt::Product(priv.primes);

  if (options.force_p) {
    priv.p = *options.force_p;
    if (priv.p <= product) {
      throw DomainError("forced p must exceed the prime product " +
                        Str(product));
    }
    if (!nt::IsProbablePrime(priv.p)) {
      throw DomainError("forced p " + Str(priv.p) + " is not prime");
    }
  } else if (options.strategy == PrimeStrategy::kDeterministicLeastPrime) {
    priv.p = nt::NextPrimeAbove(product);
  } else {
    // Bertrand's postulate guarantees a prime in (product, 2 * product).
    for (;;) {
      Nat candidate = rng.UniformNat(product + 1, 2 * product - 1);
      if (nt::IsProbablePrime(candidate)) {
        priv.p = candidate;
        break;
      }
    }
  }

  if (options.force_s) {
    priv.s = *options.force_s;
    if (priv.s < 1 || priv.s >= priv.p - 1 ||
        nt::Gcd(priv.s, priv.p - 1) != 1) {
      throw DomainError("forced s must lie in [1, p-1) and be coprime to p-1");
    }
  } else {
    priv.s = DrawExponent(priv.p, rng);
  }

  KeyPair keys{DerivePublicKey(priv), priv};
  return keys;
}

PublicKey DerivePublicKey(const PrivateKey& priv) {
  const Nat s_inverse = nt::ModInverse(priv.s, priv.p - 1);
  PublicKey pub;
  pub.p = priv.p;
  pub.v.reserve(priv.primes.size());
  for (const Nat& prime : priv.primes) {
    pub.v.push_back(PublicValue(prime, s_inverse, priv.p));
  }
  return pub;
}

void ValidatePrivateKey(const PrivateKey& priv) {
  CheckPrimeCount(priv.n());
  for (std::size_t i = 0; i < priv.primes.size(); ++i) {
    if (!nt::IsProbablePrime(priv.primes[i])) {
      throw DomainError("primes[" + std::to_string(i) + "] is not prime");
    }
    if (i > 0 && priv.primes[i] <= priv.primes[i - 1]) {
      throw DomainError("primes must be strictly increasing");
    }
  }
  if (priv.p <= nt::Product(priv.primes)) {
    throw DomainError("p must exceed the product of the primes");
  }
  if (!nt::IsProbablePrime(priv.p)) throw DomainError("p is not prime");
  if (priv.s < 1 || nt::Gcd(priv.s, priv.p - 1) != 1) {
    throw DomainError("s must be coprime to p-1");
  }
}

void ValidatePublicKey(const PublicKey& pub) {
  CheckPrimeCount(pub.n());
  if (!nt::IsProbablePrime(pub.p)) throw DomainError("p is not prime");
  for (std::size_t i = 0; i < pub.v.size(); ++i) {
    if (pub.v[i] < 1 || pub.v[i] >= pub.p) {
      throw DomainError("v[" + std::to_string(i) + "] outside [1, p)");
    }
  }
}

void ValidateKeyPair(const PublicKey& pub, const PrivateKey& priv) {
  ValidatePublicKey(pub);
  ValidatePrivateKey(priv);
  if (pub.p != priv.p || pub.n() != priv.n()) {
    throw DomainError("public and private keys describe different systems");
  }
  for (std::size_t i = 0; i < pub.v.size(); ++i) {
    if (nt::ModPow(pub.v[i], priv.s, priv.p) != priv.primes[i]) {
      throw DomainError("v[" + std::to_string(i) + "]^s != primes[" +
                        std::to_string(i) + "] mod p");
    }
  }
}

Nat Encrypt(const PublicKey& pub, const Nat& m) {
  const Nat limit = Nat(1) << pub.n();
  if (m <= 0 || m >= limit) {
    throw DomainError("plaintext must lie in [1, 2^" +
                      std::to_string(pub.n()) + ")");
  }
  Nat c = 1;
  for (std::size_t i = 0; i < pub.n(); ++i) {
    if (bit_test(m, static_cast<unsigned>(i))) c = (c * pub.v[i]) % pub.p;
  }
  return c;
}

Nat Decrypt(const PrivateKey& priv, const Nat& c) {
  CheckCiphertextRange(priv.p, c);
  Nat residue = nt::ModPow(c, priv.s, priv.p);
  Nat m = 0;
  for (std::size_t i = 0; i < priv.primes.size(); ++i) {
    if (residue % priv.primes[i] == 0) {
      residue /= priv.primes[i];
      bit_set(m, static_cast<unsigned>(i));
    }
  }
  if (residue != 1) {
    throw MalformedCiphertext("c^s mod p leaves residual factor " +
                              Str(residue));
  }
  return m;
}

Nat PartialDecrypt(const KeyShare& share, const Nat& c) {
  CheckCiphertextRange(share.p, c);
  const Nat residue = nt::ModPow(c, share.s, share.p);
  Nat contribution = 0;
  for (const IndexedPrime& entry : share.primes) {
    if (residue % entry.prime == 0) {
      bit_set(contribution, static_cast<unsigned>(entry.index));
    }
  }
  return contribution;
}

std::vector<Nat> BitPrimes(const Nat& m, const std::vector<Nat>& primes) {
  if (m < 0 || m >= (Nat(1) << primes.size())) {
    throw DomainError("plaintext has bits beyond the prime list");
  }
  std::vector<Nat> selected;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (bit_test(m, static_cast<unsigned>(i))) selected.push_back(primes[i]);
  }
  return selected;
}

}  // namespace groupauth
