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

// JSON documents exchanged between key generation, tokens and verifiers.
//
// Every document is a UTF-8 JSON object with a "kind" discriminator. Big
// integers are decimal strings. Parsers throw SchemaError naming the first
// offending field.
//
//   ns-public        {n, p, v[]}
//   ns-private       {n, p, s, primes[]}
//   share-monotone   {holder, p, s, primes[], bit_indices[]}
//   share-sequence   {holder, p, s, slots[]: {primes[], bit_indices[]} | null}
//   challenge        {session_id, mode, merge, slot_count, ciphertexts[]}
//   verifier-state   {session_id, mode, merge, slot_count, plaintexts[]}
//   response         {session_id, values[]}
//   verdict          {session_id, accepted, matching_slot, [merged[]]}
//
// Holder names appear only in share documents.

#ifndef GROUPAUTH_SERIALIZE_H_
#define GROUPAUTH_SERIALIZE_H_

#include <string>
#include <string_view>

#include "groupauth/nscrypt.h"
#include "groupauth/protocol.h"
#include "groupauth/sharesplit.h"

namespace groupauth {

inline constexpr std::string_view kKindPublic = "ns-public";
inline constexpr std::string_view kKindPrivate = "ns-private";
inline constexpr std::string_view kKindShareMonotone = "share-monotone";
inline constexpr std::string_view kKindShareSequence = "share-sequence";
inline constexpr std::string_view kKindChallenge = "challenge";
inline constexpr std::string_view kKindVerifierState = "verifier-state";
inline constexpr std::string_view kKindResponse = "response";
inline constexpr std::string_view kKindVerdict = "verdict";

// The "kind" of a document. Throws SchemaError if absent or not JSON.
std::string DocumentKind(std::string_view text);

std::string Serialize(const PublicKey& pub);
std::string Serialize(const PrivateKey& priv);
std::string Serialize(const KeyShare& share);
std::string Serialize(const ShareSequence& share);
std::string Serialize(const Challenge& challenge);
std::string Serialize(const VerifierState& state);
std::string Serialize(const ResponseVector& response);
std::string Serialize(const Verdict& verdict);

PublicKey ParsePublicKey(std::string_view text);
PrivateKey ParsePrivateKey(std::string_view text);
KeyShare ParseKeyShare(std::string_view text);
ShareSequence ParseShareSequence(std::string_view text);
Challenge ParseChallenge(std::string_view text);
VerifierState ParseVerifierState(std::string_view text);
ResponseVector ParseResponse(std::string_view text);
Verdict ParseVerdict(std::string_view text);

}  // namespace groupauth

#endif  // GROUPAUTH_SERIALIZE_H_
