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

#include "groupauth/sharesplit.h"

#include <algorithm>
#include <set>
#include <utility>

#include "groupauth/errors.h"

namespace groupauth {
namespace {

// Expression tree flattened into preorder, with AND nodes numbered.
struct FlatNode {
  Expr::Kind kind;
  std::size_t holder = 0;
  std::size_t parent = 0;
  int and_id = -1;
  std::vector<std::size_t> children;
};

struct FlatTree {
  std::vector<FlatNode> nodes;
  std::vector<std::size_t> and_nodes;  // and_id -> node index
};

std::size_t Flatten(const Expr& expr, std::size_t parent, FlatTree& tree) {
  const std::size_t index = tree.nodes.size();
  tree.nodes.push_back({expr.kind, expr.holder, parent, -1, {}});
  if (expr.kind == Expr::Kind::kAnd) {
    tree.nodes[index].and_id = static_cast<int>(tree.and_nodes.size());
    tree.and_nodes.push_back(index);
  }
  for (const Expr& child : expr.children) {
    const std::size_t child_index = Flatten(child, index, tree);
    tree.nodes[index].children.push_back(child_index);
  }
  return index;
}

// The path a single prime index takes through the tree: every OR forwards it
// to all children, every reached AND to exactly one. `choice[k]` is the child
// taken at AND node k, or -1 when the index never reaches it. `leaves` are the
// holders whose leaves receive the index. Each routing's leaves form a set of
// holders whose joint absence falsifies the policy.
struct Routing {
  std::vector<int> choice;
  Group leaves;
};

constexpr std::size_t kMaxRoutings = std::size_t{1} << 18;

// Keeps routings whose leaf set is minimal; among equal leaf sets keeps the
// lexicographically smallest choice vector. Result is sorted by choice.
std::vector<Routing> Minimize(std::vector<Routing> routings) {
  std::sort(routings.begin(), routings.end(),
            [](const Routing& a, const Routing& b) { return a.choice < b.choice; });
  std::vector<Routing> kept;
  for (const Routing& r : routings) {
    bool dominated = false;
    for (const Routing& other : routings) {
      if (other.leaves != r.leaves && other.leaves.IsSubsetOf(r.leaves)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    const bool duplicate =
        std::any_of(kept.begin(), kept.end(),
                    [&](const Routing& k) { return k.leaves == r.leaves; });
    if (!duplicate) kept.push_back(r);
  }
  return kept;
}

std::vector<Routing> MinimalRoutings(const FlatTree& tree, std::size_t node) {
  const FlatNode& n = tree.nodes[node];
  const std::size_t width = tree.and_nodes.size();
  switch (n.kind) {
    case Expr::Kind::kVar:
      return {Routing{std::vector<int>(width, -1), Group().With(n.holder)}};
    case Expr::Kind::kOr: {
      std::vector<Routing> acc = {Routing{std::vector<int>(width, -1), Group()}};
      for (std::size_t child : n.children) {
        const std::vector<Routing> sub = MinimalRoutings(tree, child);
        std::vector<Routing> next;
        for (const Routing& a : acc) {
          for (const Routing& b : sub) {
            Routing merged = a;
            for (std::size_t k = 0; k < width; ++k) {
              if (b.choice[k] >= 0) merged.choice[k] = b.choice[k];
            }
            merged.leaves = Group(a.leaves.bits() | b.leaves.bits());
            next.push_back(std::move(merged));
          }
        }
        if (next.size() > kMaxRoutings) {
          throw InsufficientPrimes("policy needs too many distinct routings");
        }
        acc = Minimize(std::move(next));
      }
      return acc;
    }
    case Expr::Kind::kAnd: {
      std::vector<Routing> all;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        for (Routing r : MinimalRoutings(tree, n.children[i])) {
          r.choice[n.and_id] = static_cast<int>(i);
          all.push_back(std::move(r));
        }
      }
      return Minimize(std::move(all));
    }
    case Expr::Kind::kNot:
      break;
  }
  throw NonMonotone("NOT cannot be split");
}

// Routing whose AND choices are fixed by `forced` where given and 0 elsewhere.
Routing ForcedRouting(const FlatTree& tree, std::size_t node,
                      const std::vector<int>& forced, Routing acc) {
  const FlatNode& n = tree.nodes[node];
  if (n.kind == Expr::Kind::kVar) {
    acc.leaves = acc.leaves.With(n.holder);
    return acc;
  }
  if (n.kind == Expr::Kind::kOr) {
    for (std::size_t child : n.children) {
      acc = ForcedRouting(tree, child, forced, std::move(acc));
    }
    return acc;
  }
  const int pick = std::max(forced[n.and_id], 0);
  acc.choice[n.and_id] = pick;
  return ForcedRouting(tree, n.children[pick], forced, std::move(acc));
}

bool Reaches(const std::vector<Routing>& routings, int and_id, int child) {
  return std::any_of(routings.begin(), routings.end(), [&](const Routing& r) {
    return r.choice[and_id] == child;
  });
}

// Adds non-minimal routings so AND children that no minimal routing visits
// still receive indices, as far as `capacity` allows. Every routing's leaf set
// falsifies the policy, so extra routings never admit an unauthorized group.
void AddFillers(const FlatTree& tree, std::size_t capacity,
                std::vector<Routing>& routings) {
  const std::size_t width = tree.and_nodes.size();
  for (std::size_t k = 0; k < width && routings.size() < capacity; ++k) {
    const FlatNode& and_node = tree.nodes[tree.and_nodes[k]];
    for (std::size_t i = 0;
         i < and_node.children.size() && routings.size() < capacity; ++i) {
      if (Reaches(routings, static_cast<int>(k), static_cast<int>(i))) continue;
      std::vector<int> forced(width, -1);
      forced[k] = static_cast<int>(i);
      std::size_t child = tree.and_nodes[k];
      while (child != 0) {
        const std::size_t parent = tree.nodes[child].parent;
        const FlatNode& p = tree.nodes[parent];
        if (p.kind == Expr::Kind::kAnd) {
          auto it = std::find(p.children.begin(), p.children.end(), child);
          forced[p.and_id] = static_cast<int>(it - p.children.begin());
        }
        child = parent;
      }
      routings.push_back(ForcedRouting(
          tree, 0, forced, Routing{std::vector<int>(width, -1), Group()}));
    }
  }
}

struct RoutedIndex {
  std::size_t index;
  std::size_t routing;
};

// The split itself: copy at OR, partition at AND by each index's routing.
void Descend(const FlatTree& tree, std::size_t node,
             const std::vector<RoutedIndex>& set,
             const std::vector<Routing>& routings,
             std::map<std::size_t, std::set<std::size_t>>& out) {
  const FlatNode& n = tree.nodes[node];
  switch (n.kind) {
    case Expr::Kind::kVar:
      for (const RoutedIndex& r : set) out[n.holder].insert(r.index);
      return;
    case Expr::Kind::kOr:
      for (std::size_t child : n.children) {
        Descend(tree, child, set, routings, out);
      }
      return;
    case Expr::Kind::kAnd: {
      std::vector<std::vector<RoutedIndex>> parts(n.children.size());
      for (const RoutedIndex& r : set) {
        parts[routings[r.routing].choice[n.and_id]].push_back(r);
      }
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (!parts[i].empty()) {
          Descend(tree, n.children[i], parts[i], routings, out);
        }
      }
      return;
    }
    case Expr::Kind::kNot:
      throw NonMonotone("NOT cannot be split");
  }
}

void CheckPrimeCount(std::size_t plan_count, const PrivateKey& priv) {
  if (plan_count != priv.n()) {
    throw DomainError("share material built for " + std::to_string(plan_count) +
                      " primes, key has " + std::to_string(priv.n()));
  }
}

PrimeSubset Resolve(const std::vector<std::size_t>& indices,
                    const PrivateKey& priv) {
  PrimeSubset subset;
  for (std::size_t index : indices) {
    subset.push_back({index, priv.primes.at(index)});
  }
  return subset;
}

// Slot over `classes` (holder groups, one per part). Parts are ordered by
// each class's first holder in universe order.
SlotAssignment MakeSlot(std::vector<Group> classes, std::size_t prime_count) {
  std::sort(classes.begin(), classes.end(), [](Group a, Group b) {
    return a.members().front() < b.members().front();
  });
  std::vector<std::size_t> all(prime_count);
  for (std::size_t i = 0; i < prime_count; ++i) all[i] = i;
  SlotAssignment slot;
  slot.parts = BalancedPartition(all, classes.size());
  for (std::size_t part = 0; part < classes.size(); ++part) {
    for (std::size_t holder : classes[part].members()) {
      slot.member_part[holder] = part;
    }
  }
  return slot;
}

void CheckGroupSizes(const GroupFamily& family, std::size_t prime_count) {
  for (Group group : family) {
    if (group.empty()) throw DomainError("family contains the empty group");
    if (group.size() > prime_count) {
      throw GroupLargerThanPrimeCount(
          "a group of " + std::to_string(group.size()) + " exceeds " +
          std::to_string(prime_count) + " primes");
    }
  }
}

// Every group in the product classes[0] x classes[1] x ...
std::vector<Group> Transversals(const std::vector<Group>& classes) {
  std::vector<Group> groups = {Group()};
  for (Group cls : classes) {
    std::vector<Group> next;
    for (Group partial : groups) {
      for (std::size_t holder : cls.members()) {
        next.push_back(partial.With(holder));
      }
    }
    groups = std::move(next);
  }
  return groups;
}

// Grows per-part holder classes around `seed`, adding each further holder to
// the first class where every new transversal is still wanted.
std::vector<Group> GrowBox(Group seed, const GroupFamily& wanted,
                           std::size_t universe_size) {
  std::vector<Group> classes;
  for (std::size_t member : seed.members()) {
    classes.push_back(Group().With(member));
  }
  Group used = seed;
  for (std::size_t holder = 0; holder < universe_size; ++holder) {
    if (used.contains(holder)) continue;
    for (std::size_t j = 0; j < classes.size(); ++j) {
      std::vector<Group> probe = classes;
      probe[j] = Group().With(holder);
      const std::vector<Group> added = Transversals(probe);
      const bool ok = std::all_of(added.begin(), added.end(), [&](Group g) {
        return wanted.count(g) > 0;
      });
      if (ok) {
        classes[j] = classes[j].With(holder);
        used = used.With(holder);
        break;
      }
    }
  }
  return classes;
}

}  // namespace

std::vector<std::vector<std::size_t>> BalancedPartition(
    const std::vector<std::size_t>& indices, std::size_t parts) {
  if (parts == 0 || parts > indices.size()) {
    throw InsufficientPrimes("cannot split " + std::to_string(indices.size()) +
                             " indices into " + std::to_string(parts) +
                             " non-empty parts");
  }
  std::vector<std::vector<std::size_t>> out(parts);
  const std::size_t base = indices.size() / parts;
  const std::size_t extra = indices.size() % parts;
  std::size_t next = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    const std::size_t size = base + (i < extra ? 1 : 0);
    out[i].assign(indices.begin() + next, indices.begin() + next + size);
    next += size;
  }
  return out;
}

bool CoversAllIndices(const MonotoneSplit& split, Group group) {
  std::set<std::size_t> covered;
  for (const auto& [holder, indices] : split.holder_indices) {
    if (group.contains(holder)) covered.insert(indices.begin(), indices.end());
  }
  return covered.size() == split.prime_count;
}

MonotoneSplit BlSplit(const Expr& expr, const Universe& universe,
                      const std::vector<std::size_t>& prime_indices,
                      std::size_t prime_count, PartitionStrategy strategy,
                      Rng* rng) {
  if (!IsMonotone(expr)) {
    throw NonMonotone("policy contains NOT; compile it in sequence mode");
  }
  const std::set<std::size_t> distinct(prime_indices.begin(),
                                       prime_indices.end());
  if (distinct.size() != prime_indices.size()) {
    throw DomainError("prime indices must be distinct");
  }
  if (!distinct.empty() && *distinct.rbegin() >= prime_count) {
    throw DomainError("prime index out of range");
  }
  if (strategy == PartitionStrategy::kSeededRandom && rng == nullptr) {
    throw DomainError("seeded-random partitioning needs an Rng");
  }

  FlatTree tree;
  Flatten(expr, 0, tree);
  std::vector<Routing> routings = MinimalRoutings(tree, 0);
  if (routings.size() > prime_indices.size()) {
    throw InsufficientPrimes(
        "policy needs at least " + std::to_string(routings.size()) +
        " prime indices, have " + std::to_string(prime_indices.size()));
  }
  AddFillers(tree, prime_indices.size(), routings);

  // Assign every index a routing; each routing gets at least one index.
  std::vector<std::vector<std::size_t>> cells;
  if (strategy == PartitionStrategy::kBalancedContiguous) {
    cells = BalancedPartition(prime_indices, routings.size());
  } else {
    std::vector<std::size_t> shuffled = prime_indices;
    rng->Shuffle(shuffled);
    cells.resize(routings.size());
    for (std::size_t i = 0; i < shuffled.size(); ++i) {
      const std::size_t cell =
          i < routings.size() ? i : rng->UniformBelow(routings.size());
      cells[cell].push_back(shuffled[i]);
    }
  }
  std::vector<RoutedIndex> root;
  for (std::size_t cell = 0; cell < cells.size(); ++cell) {
    for (std::size_t index : cells[cell]) root.push_back({index, cell});
  }

  std::map<std::size_t, std::set<std::size_t>> received;
  Descend(tree, 0, root, routings, received);

  MonotoneSplit split;
  split.universe = universe;
  split.prime_count = prime_count;
  for (const auto& [holder, indices] : received) {
    split.holder_indices[holder].assign(indices.begin(), indices.end());
  }
  return split;
}

GroupFamily AuthorizedGroups(const SlotAssignment& slot) {
  std::vector<Group> classes(slot.parts.size());
  for (const auto& [holder, part] : slot.member_part) {
    if (part >= classes.size()) return {};
    classes[part] = classes[part].With(holder);
  }
  for (Group cls : classes) {
    if (cls.empty()) return {};
  }
  const std::vector<Group> groups = Transversals(classes);
  return GroupFamily(groups.begin(), groups.end());
}

void ValidatePlan(const SlotPlan& plan) {
  for (std::size_t s = 0; s < plan.slots.size(); ++s) {
    const SlotAssignment& slot = plan.slots[s];
    const std::string where = "slot " + std::to_string(s) + ": ";
    if (slot.parts.empty()) throw DomainError(where + "no parts");
    std::vector<bool> seen(plan.prime_count, false);
    std::size_t total = 0;
    for (const auto& part : slot.parts) {
      if (part.empty()) throw DomainError(where + "empty part");
      for (std::size_t index : part) {
        if (index >= plan.prime_count || seen[index]) {
          throw DomainError(where + "parts do not partition the primes");
        }
        seen[index] = true;
        ++total;
      }
    }
    if (total != plan.prime_count) {
      throw DomainError(where + "parts do not cover every prime");
    }
    std::vector<bool> held(slot.parts.size(), false);
    for (const auto& [holder, part] : slot.member_part) {
      if (holder >= plan.universe.size()) {
        throw DomainError(where + "holder outside the universe");
      }
      if (part >= slot.parts.size()) {
        throw DomainError(where + "holder assigned to a missing part");
      }
      held[part] = true;
    }
    if (std::find(held.begin(), held.end(), false) != held.end()) {
      throw DomainError(where + "a part has no holder");
    }
  }
}

GroupFamily PlanCoverage(const SlotPlan& plan) {
  GroupFamily covered;
  for (const SlotAssignment& slot : plan.slots) {
    const GroupFamily groups = AuthorizedGroups(slot);
    covered.insert(groups.begin(), groups.end());
  }
  return covered;
}

bool HasSharedParts(const SlotPlan& plan) {
  for (const SlotAssignment& slot : plan.slots) {
    std::vector<int> holders(slot.parts.size(), 0);
    for (const auto& [holder, part] : slot.member_part) {
      if (++holders.at(part) > 1) return true;
    }
  }
  return false;
}

SlotPlan SlotsBaseline(const GroupFamily& family, const Universe& universe,
                       std::size_t prime_count) {
  CheckGroupSizes(family, prime_count);
  SlotPlan plan{universe, prime_count, {}};
  for (Group group : family) {
    std::vector<Group> classes;
    for (std::size_t member : group.members()) {
      classes.push_back(Group().With(member));
    }
    plan.slots.push_back(MakeSlot(std::move(classes), prime_count));
  }
  return plan;
}

SlotPlan SlotsPacked(const GroupFamily& family, const Universe& universe,
                     std::size_t prime_count) {
  CheckGroupSizes(family, prime_count);
  SlotPlan plan{universe, prime_count, {}};
  GroupFamily remaining = family;
  while (!remaining.empty()) {
    std::vector<Group> best;
    std::size_t best_size = 0;
    for (Group seed : remaining) {
      std::vector<Group> classes = GrowBox(seed, remaining, universe.size());
      std::size_t size = 1;
      for (Group cls : classes) size *= cls.size();
      if (size > best_size) {
        best_size = size;
        best = std::move(classes);
      }
    }
    for (Group covered : Transversals(best)) remaining.erase(covered);
    plan.slots.push_back(MakeSlot(std::move(best), prime_count));
  }
  return plan;
}

std::map<std::string, KeyShare> IssueMonotone(const MonotoneSplit& split,
                                              const PrivateKey& priv) {
  CheckPrimeCount(split.prime_count, priv);
  std::map<std::string, KeyShare> shares;
  for (const auto& [holder, indices] : split.holder_indices) {
    if (indices.empty()) continue;
    const std::string& name = split.universe.name(holder);
    shares[name] = KeyShare{name, priv.p, priv.s, Resolve(indices, priv)};
  }
  return shares;
}

std::map<std::string, ShareSequence> IssueSequence(const SlotPlan& plan,
                                                   const PrivateKey& priv) {
  CheckPrimeCount(plan.prime_count, priv);
  ValidatePlan(plan);
  std::map<std::string, ShareSequence> sequences;
  for (std::size_t holder = 0; holder < plan.universe.size(); ++holder) {
    ShareSequence seq;
    seq.holder = plan.universe.name(holder);
    seq.p = priv.p;
    seq.s = priv.s;
    for (const SlotAssignment& slot : plan.slots) {
      auto it = slot.member_part.find(holder);
      if (it == slot.member_part.end()) {
        seq.slots.emplace_back(std::nullopt);
      } else {
        seq.slots.emplace_back(Resolve(slot.parts[it->second], priv));
      }
    }
    sequences[seq.holder] = std::move(seq);
  }
  return sequences;
}

}  // namespace groupauth
