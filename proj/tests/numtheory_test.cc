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

#include <random>

#include <gtest/gtest.h>

#include "groupauth/errors.h"
#include "oracle.h"

namespace groupauth {
namespace {

using nt::FirstNPrimes;
using nt::Gcd;
using nt::IsProbablePrime;
using nt::ModInverse;
using nt::ModPow;
using nt::NextPrimeAbove;

TEST(ModPowTest, SmallValues) {
  EXPECT_EQ(ModPow(2, 10, 1000), 24);
  for (int m : {2, 7, 1000}) {
    EXPECT_EQ(ModPow(123456, 0, m), 1);
  }
  EXPECT_EQ(ModPow(5, 3, 1), 0);
}

TEST(ModPowTest, ZeroModulusIsDomainError) {
  EXPECT_THROW(ModPow(3, 4, 0), DomainError);
}

TEST(ModPowTest, SmallExampleResidueFactorsOverTheFirstEightPrimes) {
  // 7202882^5642069 mod 9700247 must be 3 * 7 * 17 * 19.
  EXPECT_EQ(ModPow(7202882, 5642069, 9700247), 6783);
  EXPECT_EQ(6783, 3 * 7 * 17 * 19);
}

TEST(ModPowTest, ExponentsAddProperty) {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 500; ++i) {
    const oracle::u64 a = gen() % 100000, b = gen() % 10000, c = gen() % 10000;
    const oracle::u64 m = 2 + gen() % 100000;
    const Nat lhs = ModPow(a, b + c, m);
    const Nat rhs = (ModPow(a, b, m) * ModPow(a, c, m)) % m;
    ASSERT_EQ(lhs, rhs);
    ASSERT_EQ(lhs, oracle::PowMod(a, b + c, m));
  }
}

TEST(ModPowTest, LargeOperands) {
  // (2^4096 - 1)^e mod (2^4099 - 1) cross-checked via Fermat-style identity:
  // 2^k mod (2^k - 1) == 1.
  const Nat modulus = (Nat(1) << 4099) - 1;
  EXPECT_EQ(ModPow(2, 4099, modulus), 1);
}

TEST(ModInverseTest, Examples) {
  EXPECT_EQ(ModInverse(3, 7), 5);
  for (int m : {2, 9, 1000}) EXPECT_EQ(ModInverse(1, m), 1);
  EXPECT_THROW(ModInverse(4, 8), NotInvertible);
  EXPECT_THROW(ModInverse(1, 1), DomainError);
}

TEST(ModInverseTest, ProductIsOneProperty) {
  std::mt19937_64 gen(11);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const oracle::u64 m = 2 + gen() % 1000000;
    const oracle::u64 a = gen() % m;
    try {
      const Nat x = ModInverse(a, m);
      ASSERT_EQ((Nat(a) * x) % m, 1) << a << " mod " << m;
      ++checked;
    } catch (const NotInvertible&) {
      ASSERT_NE(Gcd(a, m), 1);
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(GcdTest, Examples) {
  EXPECT_EQ(Gcd(12, 18), 6);
  EXPECT_EQ(Gcd(1, 987654321), 1);
  EXPECT_EQ(Gcd(0, 7), 7);
  EXPECT_EQ(Gcd(0, 0), 0);
}

TEST(IsProbablePrimeTest, Examples) {
  EXPECT_TRUE(IsProbablePrime(Nat("7420738134871")));
  EXPECT_FALSE(IsProbablePrime(1));
  EXPECT_TRUE(IsProbablePrime(2));
  // Product of the first twelve primes.
  EXPECT_FALSE(IsProbablePrime(Nat("7420738134870")));
  EXPECT_EQ(nt::Product(FirstNPrimes(12)), Nat("7420738134810"));
}

TEST(IsProbablePrimeTest, AgreesWithTrialDivisionBelowOneMillion) {
  for (oracle::u64 n = 0; n < 1000000; ++n) {
    ASSERT_EQ(IsProbablePrime(n), oracle::IsPrimeByTrialDivision(n)) << n;
  }
}

TEST(IsProbablePrimeTest, StrongPseudoprimesAndLargeValues) {
  // Strong pseudoprime to bases 2..37 region checks and known primes.
  EXPECT_FALSE(IsProbablePrime(Nat("3215031751")));  // spsp(2,3,5,7)
  EXPECT_FALSE(IsProbablePrime(Nat("3825123056546413051")));
  EXPECT_TRUE(IsProbablePrime(Nat("18446744073709551557")));  // 2^64 - 59
  const Nat m127 = (Nat(1) << 127) - 1;
  EXPECT_TRUE(IsProbablePrime(m127));
  EXPECT_FALSE(IsProbablePrime(m127 * ((Nat(1) << 89) - 1)));
  EXPECT_FALSE(IsProbablePrime((Nat(1) << 128) + 1));
}

TEST(NextPrimeAboveTest, Examples) {
  EXPECT_EQ(NextPrimeAbove(2), 3);
  EXPECT_EQ(NextPrimeAbove(1), 2);
  EXPECT_EQ(NextPrimeAbove(Nat("7420738134810")), Nat("7420738134871"));
  // Least prime above the product of the first eight primes, by upward scan.
  oracle::u64 scan = 9699690 + 1;
  while (!oracle::IsPrimeByTrialDivision(scan)) ++scan;
  EXPECT_EQ(NextPrimeAbove(9699690), scan);
  EXPECT_EQ(scan, 9699713u);
}

TEST(NextPrimeAboveTest, NoPrimeSkippedProperty) {
  std::mt19937_64 gen(3);
  for (int i = 0; i < 300; ++i) {
    const oracle::u64 x = 1 + gen() % 999999;
    const Nat next = NextPrimeAbove(x);
    ASSERT_GT(next, x);
    const auto result = static_cast<oracle::u64>(next);
    ASSERT_TRUE(oracle::IsPrimeByTrialDivision(result));
    for (oracle::u64 y = x + 1; y < result; ++y) {
      ASSERT_FALSE(oracle::IsPrimeByTrialDivision(y)) << y;
    }
  }
}

TEST(FirstNPrimesTest, Examples) {
  EXPECT_EQ(FirstNPrimes(1), std::vector<Nat>{2});
  EXPECT_EQ(FirstNPrimes(8), (std::vector<Nat>{2, 3, 5, 7, 11, 13, 17, 19}));
  const auto twelve = FirstNPrimes(12);
  ASSERT_EQ(twelve.size(), 12u);
  EXPECT_EQ(twelve.back(), 37);
  EXPECT_EQ(FirstNPrimes(64).back(), 311);
}

TEST(ParseDecimalTest, RejectsNonDigits) {
  EXPECT_EQ(ParseDecimal("007"), 7);
  EXPECT_THROW(ParseDecimal(""), DomainError);
  EXPECT_THROW(ParseDecimal("-3"), DomainError);
  EXPECT_THROW(ParseDecimal("12a"), DomainError);
}

}  // namespace
}  // namespace groupauth
