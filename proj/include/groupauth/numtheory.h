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

// Arbitrary-precision number theory used by the cryptosystem.

#ifndef GROUPAUTH_NUMTHEORY_H_
#define GROUPAUTH_NUMTHEORY_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace groupauth {

// Non-negative arbitrary-precision integer. Signedness of the underlying type
// is never exposed: every public entry point rejects negative inputs.
using Nat = boost::multiprecision::cpp_int;

// Parses a base-10 string of digits. Throws DomainError on anything else.
Nat ParseDecimal(std::string_view text);

namespace nt {

// base^exponent mod modulus by square-and-multiply. modulus == 1 yields 0.
// Throws DomainError when modulus is zero.
Nat ModPow(const Nat& base, const Nat& exponent, const Nat& modulus);

// x with a*x == 1 (mod m). Throws NotInvertible when gcd(a, m) != 1 and
// DomainError when m < 2.
Nat ModInverse(const Nat& a, const Nat& m);

// gcd(0, 0) is 0.
Nat Gcd(const Nat& a, const Nat& b);

// Miller-Rabin. Exact below 2^64 (fixed witness set); above that, `rounds`
// pseudo-random witnesses derived from n, so repeated calls agree.
bool IsProbablePrime(const Nat& n, int rounds = 40);

// Least prime strictly greater than x.
Nat NextPrimeAbove(const Nat& x);

// The first `count` primes in increasing order.
std::vector<Nat> FirstNPrimes(std::size_t count);

Nat Product(const std::vector<Nat>& values);

}  // namespace nt
}  // namespace groupauth

#endif  // GROUPAUTH_NUMTHEORY_H_
