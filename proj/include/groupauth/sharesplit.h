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

// Compiles policies into key-share material.
//
// Monotone policies use a Benaloh-Leichter style split: a set of prime
// indices descends the expression tree, copied at every OR and partitioned at
// every AND; each holder receives the union of the sets reaching its leaves.
// A group then recovers every plaintext bit iff it satisfies the policy.
//
// Exact-group (possibly non-monotone) families use slot sequences: each slot
// partitions the primes into parts and assigns holders to parts, and a slot
// authenticates exactly the groups holding one member per part.

#ifndef GROUPAUTH_SHARESPLIT_H_
#define GROUPAUTH_SHARESPLIT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groupauth/nscrypt.h"
#include "groupauth/policy.h"
#include "groupauth/random.h"

namespace groupauth {

enum class PartitionStrategy {
  // Contiguous runs of near-equal size, earlier runs one longer.
  kBalancedContiguous,
  // Random non-empty parts drawn from the supplied Rng.
  kSeededRandom,
};

// Splits `indices` (kept in order) into `parts` contiguous runs.
std::vector<std::vector<std::size_t>> BalancedPartition(
    const std::vector<std::size_t>& indices, std::size_t parts);

struct MonotoneSplit {
  Universe universe;
  std::size_t prime_count = 0;
  // Holder index -> sorted prime indices. Holders that receive nothing (not
  // mentioned, or irrelevant to the policy) are absent.
  std::map<std::size_t, std::vector<std::size_t>> holder_indices;

  friend bool operator==(const MonotoneSplit&, const MonotoneSplit&) = default;
};

// True iff the holders in `group` jointly hold every prime index.
bool CoversAllIndices(const MonotoneSplit& split, Group group);

// Throws NonMonotone for NOT-bearing expressions and InsufficientPrimes when
// the index set is too small for the expression. `rng` is required for
// kSeededRandom.
MonotoneSplit BlSplit(const Expr& expr, const Universe& universe,
                      const std::vector<std::size_t>& prime_indices,
                      std::size_t prime_count,
                      PartitionStrategy strategy =
                          PartitionStrategy::kBalancedContiguous,
                      Rng* rng = nullptr);

struct SlotAssignment {
  // Disjoint, non-empty, together covering every prime index.
  std::vector<std::vector<std::size_t>> parts;
  // Holder index -> part index. Unlisted holders hold nothing in this slot.
  std::map<std::size_t, std::size_t> member_part;

  friend bool operator==(const SlotAssignment&, const SlotAssignment&) =
      default;
};

// Groups made of exactly one assigned holder per part and nobody else.
GroupFamily AuthorizedGroups(const SlotAssignment& slot);

struct SlotPlan {
  Universe universe;
  std::size_t prime_count = 0;
  std::vector<SlotAssignment> slots;

  friend bool operator==(const SlotPlan&, const SlotPlan&) = default;
};

// Throws DomainError if a slot's parts do not partition [0, prime_count) or
// a part has no holder.
void ValidatePlan(const SlotPlan& plan);

// Union of AuthorizedGroups over all slots.
GroupFamily PlanCoverage(const SlotPlan& plan);

// True when some part of some slot is held by two or more holders. Such plans
// cannot be merged with XOR: equal contributions cancel in pairs.
bool HasSharedParts(const SlotPlan& plan);

// One slot per group. Throws GroupLargerThanPrimeCount.
SlotPlan SlotsBaseline(const GroupFamily& family, const Universe& universe,
                       std::size_t prime_count);

// Greedy packing of several groups per slot; never more slots than
// SlotsBaseline and always exactly covering the family.
SlotPlan SlotsPacked(const GroupFamily& family, const Universe& universe,
                     std::size_t prime_count);

// Ordered per-slot shares held by one token. An empty optional is a slot where
// the token holds nothing and answers with a null response.
struct ShareSequence {
  std::string holder;
  Nat p;
  Nat s;
  std::vector<std::optional<PrimeSubset>> slots;

  friend bool operator==(const ShareSequence&, const ShareSequence&) = default;
};

// Resolves prime indices against the private key. Throws DomainError if the
// split or plan was built for a different prime count.
std::map<std::string, KeyShare> IssueMonotone(const MonotoneSplit& split,
                                              const PrivateKey& priv);
std::map<std::string, ShareSequence> IssueSequence(const SlotPlan& plan,
                                                   const PrivateKey& priv);

}  // namespace groupauth

#endif  // GROUPAUTH_SHARESPLIT_H_
