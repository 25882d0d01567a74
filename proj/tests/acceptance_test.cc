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

// Acceptance gate: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "groupauth/errors.h"
#include "groupauth/fixtures.h"
#include "groupauth/nscrypt.h"
#include "groupauth/policy.h"
#include "groupauth/protocol.h"
#include "groupauth/serialize.h"
#include "groupauth/sharesplit.h"
#include "oracle.h"

namespace groupauth {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void Check(bool condition, const std::string& what) {
    if (!condition && pass) note << "failed: " << what;
    pass = pass && condition;
  }
};

std::vector<std::size_t> Range(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

ShareBundle Bundle(const SlotPlan& plan, const PrivateKey& priv) {
  return {plan.universe, IssueSequence(plan, priv)};
}

AuditOptions Fixed(const Nat& m, MergeRule merge, NullPolicy nulls) {
  AuditOptions options;
  options.merge = merge;
  options.null_policy = nulls;
  options.fixed_plaintext = m;
  return options;
}

void PublicKeyReproduction(Outcome& o) {
  const KeyPair keys = fixtures::AirplaneKeys();
  o.Check(keys.pub.v == fixtures::PublishedAirplanePublicValues(),
          "v table differs from the published values");
  const auto p = keys.pub.p.convert_to<std::uint64_t>();
  const auto s = keys.priv.s.convert_to<std::uint64_t>();
  for (std::size_t i = 0; i < keys.pub.n(); ++i) {
    const auto v = keys.pub.v[i].convert_to<std::uint64_t>();
    o.Check(oracle::PowMod(v, s, p) == keys.priv.primes[i].convert_to<std::uint64_t>(),
            "v_" + std::to_string(i + 1) + "^s != p_" + std::to_string(i + 1));
  }
  o.note << "12 values, v_i^s = p_i";
}

void CiphertextFixture(Outcome& o) {
  const KeyPair keys = fixtures::AirplaneKeys();
  const Nat m = fixtures::AirplanePlaintext();
  const Nat c = Encrypt(keys.pub, m);
  std::vector<std::uint64_t> v;
  for (const Nat& x : keys.pub.v) v.push_back(x.convert_to<std::uint64_t>());
  o.Check(c == oracle::Encrypt(2919, v, keys.pub.p.convert_to<std::uint64_t>()),
          "encryption disagrees with the oracle");
  if (c == fixtures::PrintedAirplaneCiphertext()) {
    o.note << "c = " << c << " bit-exact";
    return;
  }
  o.Check(c == fixtures::ComputedAirplaneCiphertext(),
          "computed value differs from the recorded erratum value");
  o.Check(Decrypt(keys.priv, c) == m, "decrypt(computed c) != 2919");
  bool printed_malformed = false;
  try {
    Decrypt(keys.priv, fixtures::PrintedAirplaneCiphertext());
  } catch (const MalformedCiphertext&) {
    printed_malformed = true;
  }
  o.Check(printed_malformed, "printed value unexpectedly decrypts");
  o.note << "erratum: printed " << fixtures::PrintedAirplaneCiphertext()
         << ", computed " << c << ", decrypt(computed) = 2919";
}

void ResponseTable(Outcome& o) {
  const KeyPair keys = fixtures::AirplaneKeys();
  const Universe u = fixtures::AirplaneUniverse();
  const auto shares = IssueSequence(fixtures::PublishedAirplanePlan(), keys.priv);
  const auto [challenge, state] = MakeChallengeFor(
      keys.pub, {Mode::kSequence, MergeRule::kSum, 7},
      {fixtures::AirplanePlaintext()}, "acceptance");
  Rng rng(0);
  std::vector<ResponseVector> responses;
  for (const auto& name : u.names()) {
    responses.push_back(TokenRespond(shares.at(name), challenge, NullPolicy::kOne, rng));
  }
  const auto printed = fixtures::PrintedAirplaneResponses();
  for (std::size_t row = 0; row < 6; ++row) {
    for (std::size_t h = 0; h < 5; ++h) {
      o.Check(responses[h].values[row] == printed[row][h],
              "row " + std::to_string(row + 1) + " " + u.name(h));
    }
  }
  const std::vector<Nat> computed_last = {39, 2880, 1, 1, 1};
  for (std::size_t h = 0; h < 5; ++h) {
    o.Check(responses[h].values[6] == computed_last[h], "row 7 " + u.name(h));
  }
  // The printed last row is the computed one with B and C exchanged.
  std::vector<Nat> swapped = computed_last;
  std::swap(swapped[1], swapped[2]);
  o.Check(swapped == printed[6], "printed row 7 is not a B/C swap");
  o.note << "rows 1-6 exact, row 7 = 39,2880,1,1,1 (printed B/C swapped)";
}

void AirplaneAudit(Outcome& o) {
  const KeyPair keys = fixtures::AirplaneKeys();
  const Universe u = fixtures::AirplaneUniverse();
  const Expr policy = ParsePolicy(fixtures::kAirplanePolicy, u);
  const GroupFamily family = AuthorizedFamily(policy, u, fixtures::kAirplaneSeats);
  const Group abcd = MakeGroup(u, {"A", "B", "C", "D"});
  o.Check(family == fixtures::AirplaneGroups(), "compiled family is not the 16 groups");
  const Nat m = fixtures::AirplanePlaintext();
  Rng rng(0);
  const std::vector<std::pair<std::string, SlotPlan>> plans = {
      {"packed", SlotsPacked(family, u, 12)},
      {"baseline", SlotsBaseline(family, u, 12)},
      {"published", fixtures::PublishedAirplanePlan()}};
  for (const auto& [label, plan] : plans) {
    const AuditReport report =
        Audit(keys.priv, Bundle(plan, keys.priv), family,
              Fixed(m, MergeRule::kSum, NullPolicy::kOne), rng);
    o.Check(report.acceptance_counts.size() == 31, label + ": not 31 subsets");
    o.Check(report.trials[0].accepted == fixtures::AirplaneGroups(),
            label + ": accepted " + FormatFamily(report.trials[0].accepted, u));
    o.Check(!report.trials[0].accepted.contains(abcd), label + ": ABCD accepted");
  }
  const ShareBundle monotone{u, IssueMonotone(BlSplit(policy, u, Range(12), 12),
                                              keys.priv)};
  const AuditReport unbounded =
      Audit(keys.priv, monotone, AuthorizedFamily(policy, u),
            Fixed(m, MergeRule::kOr, NullPolicy::kOne), rng);
  o.Check(unbounded.trials[0].accepted.contains(abcd),
          "monotone split without max_size rejects ABCD");
  o.Check(unbounded.all_agree, "monotone split disagrees with the policy");
  o.note << "16/31 accepted on packed (" << plans[0].second.slots.size()
         << " slots), baseline and published plans; ABCD accepted in monotone mode";
}

void SmallSplit(Outcome& o) {
  const KeyPair keys = fixtures::SmallKeys();
  const Universe u = fixtures::SmallUniverse();
  const auto shares = IssueMonotone(
      BlSplit(ParsePolicy(fixtures::kSmallPolicy, u), u, Range(8), 8), keys.priv);
  auto primes = [&](const std::string& holder) {
    std::vector<Nat> out;
    for (const auto& entry : shares.at(holder).primes) out.push_back(entry.prime);
    return out;
  };
  o.Check(primes("A1") == std::vector<Nat>{2, 3, 5, 7}, "P1");
  o.Check(primes("A2") == std::vector<Nat>{11, 13, 17, 19}, "P2");
  o.Check(primes("A3") == std::vector<Nat>{11, 13, 17, 19}, "P3");
  const auto [challenge, state] =
      MakeChallengeFor(keys.pub, {}, {fixtures::SmallPlaintext()}, "small");
  const Nat m1 = TokenRespond(shares.at("A1"), challenge).values[0];
  const Nat m2 = TokenRespond(shares.at("A2"), challenge).values[0];
  const Nat m3 = TokenRespond(shares.at("A3"), challenge).values[0];
  o.Check(m1 == 10 && m2 == 192 && m3 == 192, "partial contributions");
  o.Check((m1 | m2) == 202 && Verify(state, {m1 | m2}).accepted, "A1,A2");
  o.Check((m1 | m3) == 202 && Verify(state, {m1 | m3}).accepted, "A1,A3");
  o.Check((m2 | m3) == 192 && !Verify(state, {m2 | m3}).accepted, "A2,A3");
  o.note << "P1={2,3,5,7} P2=P3={11,13,17,19}; 10|192 = 202; A2,A3 -> 192 rejected";
}

void Roundtrip(Outcome& o) {
  std::size_t failures = 0;
  for (std::size_t n : {8u, 12u, 16u}) {
    Rng rng(1000 + n);
    KeygenOptions options;
    options.n = n;
    options.strategy = PrimeStrategy::kSeededRandom;
    const KeyPair keys = Keygen(options, rng);
    const Nat top = (Nat(1) << n) - 1;
    for (int i = 0; i < 200; ++i) {
      const Nat m = rng.UniformNat(1, top);
      if (Decrypt(keys.priv, Encrypt(keys.pub, m)) != m) ++failures;
    }
  }
  o.Check(failures == 0, std::to_string(failures) + " roundtrip failures");
  o.note << "600 messages, " << failures << " failures";
}

void BlOracle(Outcome& o) {
  std::mt19937 gen(20260101);
  const std::vector<std::string> names = {"A", "B", "C", "D", "E"};
  std::size_t counterexamples = 0, errors = 0;
  for (int i = 0; i < 100; ++i) {
    const int vars = std::uniform_int_distribution<int>(1, 5)(gen);
    const std::vector<std::string> used(names.begin(), names.begin() + vars);
    const Universe u(used);
    const oracle::Node node = oracle::RandomNode(gen, vars, 4, false);
    try {
      const MonotoneSplit split =
          BlSplit(ParsePolicy(oracle::Text(node, used), u), u, Range(12), 12);
      for (std::uint32_t g = 1; g < (1U << vars); ++g) {
        if (CoversAllIndices(split, Group(g)) != oracle::Eval(node, g)) {
          ++counterexamples;
        }
      }
    } catch (const Error&) {
      ++errors;
    }
  }
  o.Check(counterexamples == 0 && errors == 0,
          std::to_string(counterexamples) + " counterexamples, " +
              std::to_string(errors) + " errors");
  o.note << "100 expressions, " << counterexamples << " counterexamples";
}

void PlanExactness(Outcome& o) {
  std::mt19937 gen(777);
  const Universe u({"A", "B", "C", "D", "E"});
  std::size_t baseline_slots = 0, packed_slots = 0;
  for (int i = 0; i < 50; ++i) {
    GroupFamily family;
    while (family.empty()) {
      for (std::uint32_t g = 1; g < 32; ++g) {
        if (gen() % 4 == 0) family.insert(Group(g));
      }
    }
    const SlotPlan baseline = SlotsBaseline(family, u, 12);
    const SlotPlan packed = SlotsPacked(family, u, 12);
    o.Check(PlanCoverage(baseline) == family, "baseline coverage");
    o.Check(PlanCoverage(packed) == family, "packed coverage");
    o.Check(packed.slots.size() <= baseline.slots.size(), "packed larger");
    baseline_slots += baseline.slots.size();
    packed_slots += packed.slots.size();
  }
  o.note << "50 families exact; slots baseline " << baseline_slots
         << ", packed " << packed_slots;
}

void XorPitfall(Outcome& o) {
  // The xor-safe plan for the airplane family: one slot per group.
  const KeyPair keys = fixtures::AirplaneKeys();
  const Universe u = fixtures::AirplaneUniverse();
  const Group everyone = MakeGroup(u, {"A", "B", "C", "D", "E"});
  const SlotPlan plan = SlotsBaseline(fixtures::AirplaneGroups(), u, 12);
  const ShareBundle bundle = Bundle(plan, keys.priv);
  Rng rng(9);
  const Nat m = fixtures::AirplanePlaintext();
  const AuditReport ones = Audit(keys.priv, bundle, fixtures::AirplaneGroups(),
                                 Fixed(m, MergeRule::kXor, NullPolicy::kOne), rng);
  o.Check(ones.trials[0].accepted.contains(everyone),
          "ABCDE not accepted with null=1");
  AuditOptions random = Fixed(m, MergeRule::kXor, NullPolicy::kRandomNonzero);
  random.trials = 100;
  const AuditReport randomized =
      Audit(keys.priv, bundle, fixtures::AirplaneGroups(), random, rng);
  o.Check(randomized.acceptance_counts.at(everyone) == 0,
          "ABCDE accepted with random nulls");
  o.note << "null=1: ABCDE accepted; random-nonzero: "
         << randomized.acceptance_counts.at(everyone) << "/100 (baseline plan)";
}

std::set<std::string> Keys(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  std::set<std::string> keys;
  for (const auto& item : doc.items()) keys.insert(item.key());
  return keys;
}

void Anonymity(Outcome& o) {
  const KeyPair keys = fixtures::AirplaneKeys();
  const Universe u = fixtures::AirplaneUniverse();
  const SlotPlan plan = SlotsPacked(fixtures::AirplaneGroups(), u, 12);
  const auto shares = IssueSequence(plan, keys.priv);
  Rng rng(10);
  const auto [challenge, state] = MakeChallenge(
      keys.pub, {Mode::kSequence, MergeRule::kSum, plan.slots.size()}, rng);
  std::vector<ResponseVector> responses;
  for (const auto& [name, share] : shares) {
    responses.push_back(TokenRespond(share, challenge, NullPolicy::kOne, rng));
  }
  const std::vector<Nat> merged =
      MergeSequence(responses, MergeRule::kSum, plan.slots.size());
  const Verdict verdict = Verify(state, merged);

  o.Check(Keys(Serialize(challenge)) ==
              std::set<std::string>{"kind", "session_id", "mode", "merge",
                                    "slot_count", "ciphertexts"},
          "challenge fields");
  o.Check(Keys(Serialize(verdict)) ==
              std::set<std::string>{"kind", "session_id", "accepted",
                                    "matching_slot", "merged"},
          "verdict fields");
  for (const auto& r : responses) {
    o.Check(Keys(Serialize(r)) ==
                std::set<std::string>{"kind", "session_id", "values"},
            "response fields");
  }

  std::mt19937 gen(11);
  for (int i = 0; i < 100; ++i) {
    std::shuffle(responses.begin(), responses.end(), gen);
    o.Check(MergeSequence(responses, MergeRule::kSum, plan.slots.size()) == merged,
            "merge changed under permutation");
  }
  o.note << "no holder field in challenge/response/verdict; 100 shuffles invariant";
}

}  // namespace
}  // namespace groupauth

int main() {
  using groupauth::Outcome;
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>>
      criteria = {
          {"public-key reproduction", groupauth::PublicKeyReproduction},
          {"ciphertext fixture", groupauth::CiphertextFixture},
          {"response table", groupauth::ResponseTable},
          {"airplane audit", groupauth::AirplaneAudit},
          {"small-example split", groupauth::SmallSplit},
          {"roundtrip property", groupauth::Roundtrip},
          {"split oracle equivalence", groupauth::BlOracle},
          {"slot-plan exactness", groupauth::PlanExactness},
          {"xor pitfall", groupauth::XorPitfall},
          {"anonymity", groupauth::Anonymity},
      };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      criteria[i].second(outcome);
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.note << "exception: " << e.what();
    }
    std::printf("[%s] %2zu %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), outcome.note.str().c_str());
    failed += !outcome.pass;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
