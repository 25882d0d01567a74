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

// Reference systems from the published worked examples: a 12-prime
// "airplane" system with five employees A..E, and an 8-prime system shared by
// three holders A1..A3.

#ifndef GROUPAUTH_FIXTURES_H_
#define GROUPAUTH_FIXTURES_H_

#include <string_view>
#include <vector>

#include "groupauth/nscrypt.h"
#include "groupauth/policy.h"
#include "groupauth/sharesplit.h"

namespace groupauth::fixtures {

// Managers A and B; at least two people, at least one manager.
inline constexpr std::string_view kAirplanePolicy =
    "(A and B) or ((A or B) and (C or D or E))";
inline constexpr std::size_t kAirplaneSeats = 3;

Universe AirplaneUniverse();
KeyPair AirplaneKeys();
// The published public-value table, v[0] .. v[11].
std::vector<Nat> PublishedAirplanePublicValues();
Nat AirplanePlaintext();  // 2919

// The value printed as the encryption of 2919. It is not: it decrypts to a
// residue with a large non-system factor. Kept to document the erratum.
Nat PrintedAirplaneCiphertext();
// encrypt(2919) as actually computed under AirplaneKeys().
Nat ComputedAirplaneCiphertext();

// The sixteen groups allowed on the plane.
GroupFamily AirplaneGroups();

// The published seven-slot share table.
SlotPlan PublishedAirplanePlan();

// The published per-slot token responses, rows = slots, columns = A..E.
// Row 7 has B and C swapped relative to the share table.
std::vector<std::vector<Nat>> PrintedAirplaneResponses();

inline constexpr std::string_view kSmallPolicy = "(A1 and A2) or (A1 and A3)";
Universe SmallUniverse();
KeyPair SmallKeys();  // p = 9700247, s = 5642069, eight primes
Nat SmallPlaintext();   // 202
Nat SmallCiphertext();  // 7202882

}  // namespace groupauth::fixtures

#endif  // GROUPAUTH_FIXTURES_H_
