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

// Challenge-response group authentication.
//
// The verifier encrypts a random plaintext and hands the ciphertext(s) to
// every token present. Each token answers with its partial decryption per
// slot, or a null response where it holds nothing. The verifier merges the
// anonymous responses and accepts iff some slot merges to its plaintext.
//
// Verifier-side functions take only public-key material and VerifierState;
// nothing on that path can read s or a prime subset.

#ifndef GROUPAUTH_PROTOCOL_H_
#define GROUPAUTH_PROTOCOL_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "groupauth/nscrypt.h"
#include "groupauth/policy.h"
#include "groupauth/random.h"
#include "groupauth/sharesplit.h"

namespace groupauth {

enum class Mode { kMonotone, kSequence };
enum class MergeRule { kOr, kSum, kXor };
enum class NullPolicy { kOne, kRandomNonzero };

std::string_view ToString(Mode mode);
std::string_view ToString(MergeRule merge);
std::string_view ToString(NullPolicy policy);
// Throw DomainError on unknown names.
Mode ParseMode(std::string_view text);
MergeRule ParseMergeRule(std::string_view text);
NullPolicy ParseNullPolicy(std::string_view text);

struct Challenge {
  std::string session_id;
  Mode mode = Mode::kMonotone;
  MergeRule merge = MergeRule::kOr;
  std::size_t slot_count = 1;
  // One shared ciphertext, or one per slot with per-index randomness.
  std::vector<Nat> ciphertexts;

  const Nat& CiphertextFor(std::size_t slot) const {
    return ciphertexts.size() == 1 ? ciphertexts.front() : ciphertexts.at(slot);
  }
  friend bool operator==(const Challenge&, const Challenge&) = default;
};

// Kept by the verifier; never sent to tokens.
struct VerifierState {
  std::string session_id;
  Mode mode = Mode::kMonotone;
  MergeRule merge = MergeRule::kOr;
  std::size_t slot_count = 1;
  std::vector<Nat> plaintexts;  // parallel to Challenge::ciphertexts

  friend bool operator==(const VerifierState&, const VerifierState&) = default;
};

// A token's answer. Deliberately carries no holder identity.
struct ResponseVector {
  std::string session_id;
  std::vector<Nat> values;

  friend bool operator==(const ResponseVector&, const ResponseVector&) = default;
};

struct Verdict {
  std::string session_id;
  bool accepted = false;
  std::optional<std::size_t> matching_slot;  // 0-based
  std::vector<Nat> merged;  // diagnostic; empty when suppressed

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct ChallengeOptions {
  Mode mode = Mode::kMonotone;
  MergeRule merge = MergeRule::kOr;
  std::size_t slot_count = 1;
  bool per_index_random = false;
};

// Throws DomainError when mode and merge disagree (OR iff monotone), when a
// monotone challenge asks for more than one slot, or slot_count is zero.
void ValidateChallengeOptions(const ChallengeOptions& options);

// Draws m uniformly from [1, 2^n - 1] (one per slot with per-index
// randomness) and encrypts it.
std::pair<Challenge, VerifierState> MakeChallenge(const PublicKey& pub,
                                                  const ChallengeOptions& options,
                                                  Rng& rng);

// Same, with caller-chosen plaintexts (one, or slot_count of them).
std::pair<Challenge, VerifierState> MakeChallengeFor(
    const PublicKey& pub, const ChallengeOptions& options,
    std::vector<Nat> plaintexts, std::string session_id);

// Null responses are 1, or with kRandomNonzero a fresh value in [2, p).
ResponseVector TokenRespond(const ShareSequence& share,
                            const Challenge& challenge, NullPolicy null_policy,
                            Rng& rng);
ResponseVector TokenRespond(const KeyShare& share, const Challenge& challenge);

// Bitwise OR of single-value responses; 0 for no responses.
Nat MergeMonotone(std::span<const ResponseVector> responses);

// Per-slot sum or XOR; all zeros for no responses.
std::vector<Nat> MergeSequence(std::span<const ResponseVector> responses,
                               MergeRule merge, std::size_t slot_count);

// Dispatches on the rule; OR yields a one-element vector.
std::vector<Nat> Merge(std::span<const ResponseVector> responses,
                       MergeRule merge, std::size_t slot_count);

// Accepts iff merged[i] equals the i-th plaintext (or the only plaintext).
Verdict Verify(const VerifierState& state, const std::vector<Nat>& merged,
               bool include_diagnostics = true);

// Issued share material for a whole universe.
struct ShareBundle {
  Universe universe;
  std::variant<std::map<std::string, KeyShare>,
               std::map<std::string, ShareSequence>>
      shares;

  Mode mode() const {
    return std::holds_alternative<std::map<std::string, KeyShare>>(shares)
               ? Mode::kMonotone
               : Mode::kSequence;
  }
  std::size_t slot_count() const;
};

struct AuditOptions {
  std::size_t trials = 1;
  MergeRule merge = MergeRule::kSum;  // ignored (OR) for monotone bundles
  NullPolicy null_policy = NullPolicy::kOne;
  bool per_index_random = false;
  // Plaintext for every trial instead of a random draw.
  std::optional<Nat> fixed_plaintext;
};

struct AuditTrial {
  std::vector<Nat> plaintexts;
  GroupFamily accepted;
  bool agrees = false;
};

struct AuditReport {
  std::vector<AuditTrial> trials;
  // Per non-empty subset of the universe: how many trials accepted it.
  std::map<Group, std::size_t> acceptance_counts;
  bool all_agree = true;
};

// Simulates every non-empty subset end to end (respond, merge, verify) for
// each trial and compares the accepted groups with `expected`. Each token
// answers a challenge once; subsets reuse those answers.
AuditReport Audit(const PrivateKey& priv, const ShareBundle& bundle,
                  const GroupFamily& expected, const AuditOptions& options,
                  Rng& rng);

}  // namespace groupauth

#endif  // GROUPAUTH_PROTOCOL_H_
