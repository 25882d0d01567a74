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

// Boolean policies over named key holders.
//
// Grammar (precedence NOT > AND > OR, AND/OR left-associative):
//   or_expr   := and_expr (("or" | "|") and_expr)*
//   and_expr  := unary (("and" | "&") unary)*
//   unary     := ("not" | "!") unary | "(" or_expr ")" | identifier
//   identifier:= [A-Za-z_][A-Za-z0-9_]*
// Nested AND/OR nodes of the same kind are flattened into one n-ary node.

#ifndef GROUPAUTH_POLICY_H_
#define GROUPAUTH_POLICY_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace groupauth {

inline constexpr std::size_t kMaxUniverseSize = 20;

// Ordered list of distinct holder names.
class Universe {
 public:
  Universe() = default;
  // Throws DomainError if empty, too large, duplicated or not identifiers.
  explicit Universe(std::vector<std::string> names);

  // "A,B,C" (surrounding whitespace is ignored).
  static Universe FromCsv(std::string_view csv);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> IndexOf(std::string_view name) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<std::string> names_;
};

// A subset of a universe, stored as a bitmask over holder indices. Groups sort
// by size first, then lexicographically by member indices, which is the order
// groups are listed in tables ("AB, AC, ..., ABC, ...").
class Group {
 public:
  constexpr Group() = default;
  constexpr explicit Group(std::uint32_t bits) : bits_(bits) {}
  static Group Of(std::initializer_list<std::size_t> members);

  std::uint32_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  bool contains(std::size_t member) const { return (bits_ >> member) & 1U; }
  bool IsSubsetOf(Group other) const { return (bits_ & ~other.bits_) == 0; }
  Group With(std::size_t member) const {
    return Group(bits_ | (std::uint32_t{1} << member));
  }
  std::vector<std::size_t> members() const;

  friend bool operator==(Group a, Group b) { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(Group a, Group b);

 private:
  std::uint32_t bits_ = 0;
};

using GroupFamily = std::set<Group>;

// Looks names up in the universe. Throws UnknownIdentifier.
Group MakeGroup(const Universe& universe,
                std::initializer_list<std::string_view> names);
Group MakeGroup(const Universe& universe, const std::vector<std::string>& names);

// "AC" when every holder name is one character, "{A1,A2}" otherwise.
std::string FormatGroup(Group group, const Universe& universe);
std::string FormatFamily(const GroupFamily& family, const Universe& universe);

struct Expr {
  enum class Kind { kVar, kAnd, kOr, kNot };

  Kind kind = Kind::kVar;
  std::string name;        // kVar only
  std::size_t holder = 0;  // kVar only: index into the universe
  std::vector<Expr> children;

  static Expr Var(std::string name, std::size_t holder);
  // Flattens children of the same kind. Fewer than two children after
  // flattening is a DomainError.
  static Expr And(std::vector<Expr> children);
  static Expr Or(std::vector<Expr> children);
  static Expr Not(Expr child);

  friend bool operator==(const Expr&, const Expr&) = default;
};

// Throws ParseError (with byte offset) or UnknownIdentifier.
Expr ParsePolicy(std::string_view text, const Universe& universe);

// Canonical text: "and"/"or"/"not" with the fewest parentheses that reparse
// to the same tree.
std::string Render(const Expr& expr);

bool Evaluate(const Expr& expr, Group present);

// Syntactic: true iff no NOT node occurs.
bool IsMonotone(const Expr& expr);

// Holders referenced by the expression.
Group Variables(const Expr& expr);

// Every non-empty group satisfying expr, optionally capped by size.
GroupFamily AuthorizedFamily(const Expr& expr, const Universe& universe,
                             std::optional<std::size_t> max_size = {});

// Members with no proper subset in the family.
GroupFamily MinimalSets(const GroupFamily& family);

}  // namespace groupauth

#endif  // GROUPAUTH_POLICY_H_
