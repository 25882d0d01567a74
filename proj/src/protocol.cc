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

#include "groupauth/protocol.h"

#include <cstdio>

#include "groupauth/errors.h"

namespace groupauth {
namespace {

std::string SessionId(Rng& rng) {
  char buffer[33];
  std::snprintf(buffer, sizeof(buffer), "%016llx%016llx",
                static_cast<unsigned long long>(rng.Next()),
                static_cast<unsigned long long>(rng.Next()));
  return buffer;
}

Nat Combine(const Nat& acc, const Nat& value, MergeRule merge) {
  switch (merge) {
    case MergeRule::kOr: return acc | value;
    case MergeRule::kSum: return acc + value;
    case MergeRule::kXor: return acc ^ value;
  }
  return acc;
}

}  // namespace

std::string_view ToString(Mode mode) {
  return mode == Mode::kMonotone ? "monotone" : "sequence";
}

std::string_view ToString(MergeRule merge) {
  switch (merge) {
    case MergeRule::kOr: return "or";
    case MergeRule::kSum: return "sum";
    case MergeRule::kXor: return "xor";
  }
  return "?";
}

std::string_view ToString(NullPolicy policy) {
  return policy == NullPolicy::kOne ? "one" : "random";
}

Mode ParseMode(std::string_view text) {
  if (text == "monotone") return Mode::kMonotone;
  if (text == "sequence") return Mode::kSequence;
  throw DomainError("unknown mode '" + std::string(text) + "'");
}

MergeRule ParseMergeRule(std::string_view text) {
  if (text == "or") return MergeRule::kOr;
  if (text == "sum") return MergeRule::kSum;
  if (text == "xor") return MergeRule::kXor;
  throw DomainError("unknown merge rule '" + std::string(text) + "'");
}

NullPolicy ParseNullPolicy(std::string_view text) {
  if (text == "one") return NullPolicy::kOne;
  if (text == "random" || text == "random-nonzero") {
    return NullPolicy::kRandomNonzero;
  }
  throw DomainError("unknown null policy '" + std::string(text) + "'");
}

void ValidateChallengeOptions(const ChallengeOptions& options) {
  if (options.slot_count == 0) throw DomainError("slot_count must be >= 1");
  const bool monotone = options.mode == Mode::kMonotone;
  if (monotone != (options.merge == MergeRule::kOr)) {
    throw DomainError("OR merging goes with monotone mode and only with it");
  }
  if (monotone && options.slot_count != 1) {
    throw DomainError("monotone challenges have exactly one slot");
  }
}

std::pair<Challenge, VerifierState> MakeChallenge(const PublicKey& pub,
                                                  const ChallengeOptions& options,
                                                  Rng& rng) {
  ValidateChallengeOptions(options);
  const Nat top = (Nat(1) << pub.n()) - 1;
  const std::size_t draws = options.per_index_random ? options.slot_count : 1;
  std::vector<Nat> plaintexts;
  for (std::size_t i = 0; i < draws; ++i) {
    plaintexts.push_back(rng.UniformNat(1, top));
  }
  return MakeChallengeFor(pub, options, std::move(plaintexts), SessionId(rng));
}

std::pair<Challenge, VerifierState> MakeChallengeFor(
    const PublicKey& pub, const ChallengeOptions& options,
    std::vector<Nat> plaintexts, std::string session_id) {
  ValidateChallengeOptions(options);
  if (plaintexts.size() != 1 && plaintexts.size() != options.slot_count) {
    throw DomainError("need one plaintext or one per slot");
  }
  Challenge challenge{session_id, options.mode, options.merge,
                      options.slot_count, {}};
  for (const Nat& m : plaintexts) {
    challenge.ciphertexts.push_back(Encrypt(pub, m));
  }
  VerifierState state{std::move(session_id), options.mode, options.merge,
                      options.slot_count, std::move(plaintexts)};
  return {std::move(challenge), std::move(state)};
}

ResponseVector TokenRespond(const ShareSequence& share,
                            const Challenge& challenge, NullPolicy null_policy,
                            Rng& rng) {
  if (challenge.mode != Mode::kSequence) {
    throw DomainError("sequence shares answer sequence challenges only");
  }
  if (share.slots.size() != challenge.slot_count) {
    throw DomainError("share has " + std::to_string(share.slots.size()) +
                      " slots, challenge has " +
                      std::to_string(challenge.slot_count));
  }
  ResponseVector response{challenge.session_id, {}};
  for (std::size_t i = 0; i < share.slots.size(); ++i) {
    if (share.slots[i]) {
      const KeyShare slot_share{{}, share.p, share.s, *share.slots[i]};
      response.values.push_back(
          PartialDecrypt(slot_share, challenge.CiphertextFor(i)));
    } else if (null_policy == NullPolicy::kOne) {
      response.values.emplace_back(1);
    } else {
      response.values.push_back(rng.UniformNat(2, share.p - 1));
    }
  }
  return response;
}

ResponseVector TokenRespond(const KeyShare& share, const Challenge& challenge) {
  if (challenge.mode != Mode::kMonotone || challenge.slot_count != 1) {
    throw DomainError("monotone shares answer single-slot challenges only");
  }
  return {challenge.session_id,
          {PartialDecrypt(share, challenge.CiphertextFor(0))}};
}

Nat MergeMonotone(std::span<const ResponseVector> responses) {
  Nat merged = 0;
  for (const ResponseVector& r : responses) {
    if (r.values.size() != 1) {
      throw DomainError("monotone responses carry exactly one value");
    }
    merged |= r.values.front();
  }
  return merged;
}

std::vector<Nat> MergeSequence(std::span<const ResponseVector> responses,
                               MergeRule merge, std::size_t slot_count) {
  if (merge == MergeRule::kOr) {
    throw DomainError("sequence responses merge with sum or xor");
  }
  std::vector<Nat> merged(slot_count, Nat(0));
  for (const ResponseVector& r : responses) {
    if (r.values.size() != slot_count) {
      throw DomainError("response length does not match the slot count");
    }
    for (std::size_t i = 0; i < slot_count; ++i) {
      merged[i] = Combine(merged[i], r.values[i], merge);
    }
  }
  return merged;
}

std::vector<Nat> Merge(std::span<const ResponseVector> responses,
                       MergeRule merge, std::size_t slot_count) {
  if (merge == MergeRule::kOr) return {MergeMonotone(responses)};
  return MergeSequence(responses, merge, slot_count);
}

Verdict Verify(const VerifierState& state, const std::vector<Nat>& merged,
               bool include_diagnostics) {
  if (state.plaintexts.empty()) throw DomainError("state has no plaintext");
  if (state.plaintexts.size() != 1 &&
      state.plaintexts.size() != merged.size()) {
    throw DomainError("merged length does not match the plaintext list");
  }
  Verdict verdict;
  verdict.session_id = state.session_id;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const Nat& expected =
        state.plaintexts.size() == 1 ? state.plaintexts.front()
                                     : state.plaintexts[i];
    if (merged[i] == expected) {
      verdict.accepted = true;
      verdict.matching_slot = i;
      break;
    }
  }
  if (include_diagnostics) verdict.merged = merged;
  return verdict;
}

std::size_t ShareBundle::slot_count() const {
  if (mode() == Mode::kMonotone) return 1;
  const auto& sequences = std::get<std::map<std::string, ShareSequence>>(shares);
  return sequences.empty() ? 0 : sequences.begin()->second.slots.size();
}

AuditReport Audit(const PrivateKey& priv, const ShareBundle& bundle,
                  const GroupFamily& expected, const AuditOptions& options,
                  Rng& rng) {
  const Universe& universe = bundle.universe;
  if (universe.size() > kMaxUniverseSize) {
    throw DomainError("universe too large to audit");
  }
  const PublicKey pub = DerivePublicKey(priv);
  const bool monotone = bundle.mode() == Mode::kMonotone;
  ChallengeOptions challenge_options;
  challenge_options.mode = bundle.mode();
  challenge_options.merge = monotone ? MergeRule::kOr : options.merge;
  challenge_options.slot_count = bundle.slot_count();
  challenge_options.per_index_random = options.per_index_random;
  ValidateChallengeOptions(challenge_options);

  AuditReport report;
  const std::uint32_t limit = std::uint32_t{1} << universe.size();
  for (std::size_t t = 0; t < options.trials; ++t) {
    std::pair<Challenge, VerifierState> session;
    if (options.fixed_plaintext) {
      session = MakeChallengeFor(pub, challenge_options,
                                 {*options.fixed_plaintext},
                                 "audit-" + std::to_string(t));
    } else {
      session = MakeChallenge(pub, challenge_options, rng);
    }
    const auto& [challenge, state] = session;

    // Each present token answers once; absent holders have no entry.
    std::vector<std::optional<ResponseVector>> answers(universe.size());
    for (std::size_t h = 0; h < universe.size(); ++h) {
      const std::string& name = universe.name(h);
      if (monotone) {
        const auto& shares = std::get<0>(bundle.shares);
        if (auto it = shares.find(name); it != shares.end()) {
          answers[h] = TokenRespond(it->second, challenge);
        }
      } else {
        const auto& shares = std::get<1>(bundle.shares);
        if (auto it = shares.find(name); it != shares.end()) {
          answers[h] =
              TokenRespond(it->second, challenge, options.null_policy, rng);
        }
      }
    }

    AuditTrial trial;
    trial.plaintexts = state.plaintexts;
    for (std::uint32_t bits = 1; bits < limit; ++bits) {
      const Group group(bits);
      std::vector<ResponseVector> responses;
      for (std::size_t h : group.members()) {
        if (answers[h]) responses.push_back(*answers[h]);
      }
      const std::vector<Nat> merged =
          Merge(responses, challenge.merge, challenge.slot_count);
      if (Verify(state, merged).accepted) {
        trial.accepted.insert(group);
        ++report.acceptance_counts[group];
      } else {
        report.acceptance_counts.try_emplace(group, 0);
      }
    }
    trial.agrees = trial.accepted == expected;
    report.all_agree = report.all_agree && trial.agrees;
    report.trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace groupauth
