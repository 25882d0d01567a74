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

#include "groupauth/serialize.h"

#include <utility>
#include <vector>

#include "groupauth/errors.h"
#include "json.hpp"

namespace groupauth {
namespace {

using nlohmann::json;

json ParseObject(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) throw SchemaError("<document>", "not valid JSON");
  if (!doc.is_object()) throw SchemaError("<document>", "not a JSON object");
  return doc;
}

const json& Field(const json& doc, const std::string& name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw SchemaError(name, "missing");
  return *it;
}

void ExpectKind(const json& doc, std::string_view kind) {
  const json& value = Field(doc, "kind");
  if (!value.is_string() || value.get<std::string>() != kind) {
    throw SchemaError("kind", "expected \"" + std::string(kind) + "\"");
  }
}

std::string GetString(const json& doc, const std::string& name) {
  const json& value = Field(doc, name);
  if (!value.is_string()) throw SchemaError(name, "expected a string");
  return value.get<std::string>();
}

std::size_t CountValue(const json& value, const std::string& name) {
  if (!value.is_number_unsigned()) {
    throw SchemaError(name, "expected a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::size_t GetCount(const json& doc, const std::string& name) {
  return CountValue(Field(doc, name), name);
}

bool GetBool(const json& doc, const std::string& name) {
  const json& value = Field(doc, name);
  if (!value.is_boolean()) throw SchemaError(name, "expected a boolean");
  return value.get<bool>();
}

Nat ToNat(const json& value, const std::string& name) {
  if (!value.is_string()) {
    throw SchemaError(name, "expected a decimal string");
  }
  try {
    return ParseDecimal(value.get<std::string>());
  } catch (const DomainError&) {
    throw SchemaError(name, "expected a decimal string");
  }
}

Nat GetNat(const json& doc, const std::string& name) {
  return ToNat(Field(doc, name), name);
}

std::vector<Nat> ToNatArray(const json& value, const std::string& name) {
  if (!value.is_array()) throw SchemaError(name, "expected an array");
  std::vector<Nat> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(ToNat(value[i], name + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<Nat> GetNatArray(const json& doc, const std::string& name) {
  return ToNatArray(Field(doc, name), name);
}

json NatArray(const std::vector<Nat>& values) {
  json out = json::array();
  for (const Nat& v : values) out.push_back(v.str());
  return out;
}

json SubsetJson(const PrimeSubset& subset) {
  json primes = json::array();
  json indices = json::array();
  for (const IndexedPrime& entry : subset) {
    primes.push_back(entry.prime.str());
    indices.push_back(entry.index);
  }
  return {{"primes", primes}, {"bit_indices", indices}};
}

PrimeSubset SubsetFromJson(const json& doc, const std::string& prefix) {
  const std::vector<Nat> primes = GetNatArray(doc, "primes");
  const json& indices = Field(doc, "bit_indices");
  if (!indices.is_array() || indices.size() != primes.size()) {
    throw SchemaError(prefix + "bit_indices",
                      "expected an array parallel to primes");
  }
  if (primes.empty()) throw SchemaError(prefix + "primes", "must not be empty");
  PrimeSubset subset;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    subset.push_back(
        {CountValue(indices[i], prefix + "bit_indices[" + std::to_string(i) + "]"),
         primes[i]});
  }
  return subset;
}

std::string Dump(const json& doc) { return doc.dump(2) + "\n"; }

Mode GetMode(const json& doc) {
  try {
    return ParseMode(GetString(doc, "mode"));
  } catch (const DomainError&) {
    throw SchemaError("mode", "expected \"monotone\" or \"sequence\"");
  }
}

MergeRule GetMerge(const json& doc) {
  try {
    return ParseMergeRule(GetString(doc, "merge"));
  } catch (const DomainError&) {
    throw SchemaError("merge", "expected \"or\", \"sum\" or \"xor\"");
  }
}

}  // namespace

std::string DocumentKind(std::string_view text) {
  return GetString(ParseObject(text), "kind");
}

std::string Serialize(const PublicKey& pub) {
  return Dump({{"kind", kKindPublic},
               {"n", pub.n()},
               {"p", pub.p.str()},
               {"v", NatArray(pub.v)}});
}

std::string Serialize(const PrivateKey& priv) {
  return Dump({{"kind", kKindPrivate},
               {"n", priv.n()},
               {"p", priv.p.str()},
               {"s", priv.s.str()},
               {"primes", NatArray(priv.primes)}});
}

std::string Serialize(const KeyShare& share) {
  json doc = SubsetJson(share.primes);
  doc["kind"] = kKindShareMonotone;
  doc["holder"] = share.holder;
  doc["p"] = share.p.str();
  doc["s"] = share.s.str();
  return Dump(doc);
}

std::string Serialize(const ShareSequence& share) {
  json slots = json::array();
  for (const auto& slot : share.slots) {
    slots.push_back(slot ? SubsetJson(*slot) : json(nullptr));
  }
  return Dump({{"kind", kKindShareSequence},
               {"holder", share.holder},
               {"p", share.p.str()},
               {"s", share.s.str()},
               {"slots", slots}});
}

std::string Serialize(const Challenge& challenge) {
  return Dump({{"kind", kKindChallenge},
               {"session_id", challenge.session_id},
               {"mode", ToString(challenge.mode)},
               {"merge", ToString(challenge.merge)},
               {"slot_count", challenge.slot_count},
               {"ciphertexts", NatArray(challenge.ciphertexts)}});
}

std::string Serialize(const VerifierState& state) {
  return Dump({{"kind", kKindVerifierState},
               {"session_id", state.session_id},
               {"mode", ToString(state.mode)},
               {"merge", ToString(state.merge)},
               {"slot_count", state.slot_count},
               {"plaintexts", NatArray(state.plaintexts)}});
}

std::string Serialize(const ResponseVector& response) {
  return Dump({{"kind", kKindResponse},
               {"session_id", response.session_id},
               {"values", NatArray(response.values)}});
}

std::string Serialize(const Verdict& verdict) {
  json doc = {{"kind", kKindVerdict},
              {"session_id", verdict.session_id},
              {"accepted", verdict.accepted},
              {"matching_slot", verdict.matching_slot
                                    ? json(*verdict.matching_slot)
                                    : json(nullptr)}};
  if (!verdict.merged.empty()) doc["merged"] = NatArray(verdict.merged);
  return Dump(doc);
}

PublicKey ParsePublicKey(std::string_view text) {
  const json doc = ParseObject(text);
  ExpectKind(doc, kKindPublic);
  PublicKey pub{GetNat(doc, "p"), GetNatArray(doc, "v")};
  if (GetCount(doc, "n") != pub.v.size()) {
    throw SchemaError("v", "length differs from n");
  }
  try {
    ValidatePublicKey(pub);
  } catch (const DomainError& e) {
    throw SchemaError("p", e.what());
  }
  return pub;
}

PrivateKey ParsePrivateKey(std::string_view text) {
  const json doc = ParseObject(text);
  ExpectKind(doc, kKindPrivate);
  PrivateKey priv{GetNat(doc, "p"), GetNat(doc, "s"),
                  GetNatArray(doc, "primes")};
  if (GetCount(doc, "n") != priv.primes.size()) {
    throw SchemaError("primes", "length differs from n");
  }
  try {
    ValidatePrivateKey(priv);
  } catch (const DomainError& e) {
    throw SchemaError("s", e.what());
  }
  return priv;
}

KeyShare ParseKeyShare(std::string_view text) {
  const json doc = ParseObject(text);
  ExpectKind(doc, kKindShareMonotone);
  return KeyShare{GetString(doc, "holder"), GetNat(doc, "p"), GetNat(doc, "s"),
                  SubsetFromJson(doc, "")};
}

ShareSequence ParseShareSequence(std::string_view text) {
  const json doc = ParseObject(text);
  ExpectKind(doc, kKindShareSequence);
  ShareSequence share{GetString(doc, "holder"), GetNat(doc, "p"),
                      GetNat(doc, "s"), {}};
  const json& slots = Field(doc, "slots");
  if (!slots.is_array() || slots.empty()) {
    throw SchemaError("slots", "expected a non-empty array");
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const std::string prefix = "slots[" + std::to_string(i) + "].";
    if (slots[i].is_null()) {
      share.slots.emplace_back(std::nullopt);
    } else if (slots[i].is_object()) {
      share.slots.emplace_back(SubsetFromJson(slots[i], prefix));
    } else {
      throw SchemaError("slots[" + std::to_string(i) + "]",
                        "expected an object or null");
    }
  }
  return share;
}

Challenge ParseChallenge(std::string_view text) {
  const json doc = ParseObject(text);
  ExpectKind(doc, kKindChallenge);
  Challenge challenge{GetString(doc, "session_id"), GetMode(doc),
                      GetMerge(doc), GetCount(doc, "slot_count"),
                      GetNatArray(doc, "ciphertexts")};
  if (challenge.ciphertexts.size() != 1 &&
      challenge.ciphertexts.size() != challenge.slot_count) {
    throw SchemaError("ciphertexts", "expected one entry or one per slot");
  }
  try {
    ValidateChallengeOptions({challenge.mode, challenge.merge,
                              challenge.slot_count, false});
  } catch (const DomainError& e) {
    throw SchemaError("merge", e.what());
  }
  return challenge;
}

VerifierState ParseVerifierState(std::string_view text) {
  const json doc = ParseObject(text);
  ExpectKind(doc, kKindVerifierState);
  VerifierState state{GetString(doc, "session_id"), GetMode(doc),
                      GetMerge(doc), GetCount(doc, "slot_count"),
                      GetNatArray(doc, "plaintexts")};
  if (state.plaintexts.size() != 1 &&
      state.plaintexts.size() != state.slot_count) {
    throw SchemaError("plaintexts", "expected one entry or one per slot");
  }
  return state;
}

ResponseVector ParseResponse(std::string_view text) {
  const json doc = ParseObject(text);
  ExpectKind(doc, kKindResponse);
  return ResponseVector{GetString(doc, "session_id"),
                        GetNatArray(doc, "values")};
}

Verdict ParseVerdict(std::string_view text) {
  const json doc = ParseObject(text);
  ExpectKind(doc, kKindVerdict);
  Verdict verdict{GetString(doc, "session_id"), GetBool(doc, "accepted"), {},
                  {}};
  const json& slot = Field(doc, "matching_slot");
  if (!slot.is_null()) verdict.matching_slot = CountValue(slot, "matching_slot");
  if (doc.contains("merged")) verdict.merged = GetNatArray(doc, "merged");
  return verdict;
}

}  // namespace groupauth
