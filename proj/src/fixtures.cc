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

#include "groupauth/fixtures.h"

namespace groupauth::fixtures {
namespace {

KeyPair ForcedKeys(std::size_t n, const char* p, const char* s) {
  KeygenOptions options;
  options.n = n;
  options.force_p = Nat(p);
  options.force_s = Nat(s);
  Rng unused;
  return Keygen(options, unused);
}

}  // namespace

Universe AirplaneUniverse() { return Universe({"A", "B", "C", "D", "E"}); }

KeyPair AirplaneKeys() { return ForcedKeys(12, "7420738134871", "5642069"); }

std::vector<Nat> PublishedAirplanePublicValues() {
  return {Nat("1042080239371"), Nat("6961378167419"), Nat("556387338943"),
          Nat("6467374518496"), Nat("6101909563954"), Nat("7161849266528"),
          Nat("6408801185994"), Nat("6664307396372"), Nat("6792283659586"),
          Nat("4009453191992"), Nat("4858036635332"), Nat("3535089085276")};
}

Nat AirplanePlaintext() { return 2919; }

Nat PrintedAirplaneCiphertext() { return Nat("1073741824"); }

Nat ComputedAirplaneCiphertext() { return Nat("5802616398374"); }

GroupFamily AirplaneGroups() {
  const Universe u = AirplaneUniverse();
  GroupFamily family;
  for (std::string_view g :
       {"AB", "AC", "AD", "AE", "ACD", "ABC", "ABD", "ABE", "ACE", "ADE", "BC",
        "BD", "BE", "BCD", "BCE", "BDE"}) {
    std::vector<std::string> names;
    for (char ch : g) names.emplace_back(1, ch);
    family.insert(MakeGroup(u, names));
  }
  return family;
}

SlotPlan PublishedAirplanePlan() {
  // Prime index runs: {2..13} / {17..37} for two parts and {2..7} / {11..19} /
  // {23..37} for three.
  const std::vector<std::size_t> low6 = {0, 1, 2, 3, 4, 5};
  const std::vector<std::size_t> high6 = {6, 7, 8, 9, 10, 11};
  const std::vector<std::size_t> q = {0, 1, 2, 3};
  const std::vector<std::size_t> r = {4, 5, 6, 7};
  const std::vector<std::size_t> w = {8, 9, 10, 11};
  enum : std::size_t { A, B, C, D, E };

  SlotPlan plan{AirplaneUniverse(), 12, {}};
  plan.slots.push_back({{low6, high6}, {{A, 0}, {B, 0}, {C, 1}, {D, 1}, {E, 1}}});
  plan.slots.push_back({{q, r, w}, {{A, 0}, {B, 1}, {C, 2}, {D, 2}, {E, 2}}});
  plan.slots.push_back({{q, r, w}, {{A, 0}, {C, 1}, {D, 2}, {E, 2}}});
  plan.slots.push_back({{q, r, w}, {{B, 0}, {C, 1}, {D, 2}, {E, 2}}});
  plan.slots.push_back({{q, r, w}, {{A, 0}, {D, 1}, {E, 2}}});
  plan.slots.push_back({{q, r, w}, {{B, 0}, {D, 1}, {E, 2}}});
  plan.slots.push_back({{low6, high6}, {{A, 0}, {B, 1}}});
  return plan;
}

std::vector<std::vector<Nat>> PrintedAirplaneResponses() {
  return {{39, 39, 2880, 2880, 2880}, {7, 96, 2816, 2816, 2816},
          {7, 1, 96, 2816, 2816},     {1, 7, 96, 2816, 2816},
          {7, 1, 1, 96, 2816},        {1, 7, 1, 96, 2816},
          {39, 1, 2880, 1, 1}};
}

Universe SmallUniverse() { return Universe({"A1", "A2", "A3"}); }

KeyPair SmallKeys() { return ForcedKeys(8, "9700247", "5642069"); }

Nat SmallPlaintext() { return 202; }

Nat SmallCiphertext() { return Nat("7202882"); }

}  // namespace groupauth::fixtures
