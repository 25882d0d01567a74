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

#include "groupauth/policy.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <utility>

#include "groupauth/errors.h"

namespace groupauth {
namespace {

bool IsIdentStart(char ch) {
  return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
}

bool IsIdentChar(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
}

bool IsIdentifier(std::string_view text) {
  if (text.empty() || !IsIdentStart(text.front())) return false;
  return std::all_of(text.begin(), text.end(), IsIdentChar);
}

bool IsKeyword(std::string_view text) {
  return text == "and" || text == "or" || text == "not";
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

enum class TokenKind { kIdent, kAnd, kOr, kNot, kLParen, kRParen, kEnd };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t position;
};

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    switch (ch) {
      case '(': tokens.push_back({TokenKind::kLParen, text.substr(i, 1), i}); ++i; continue;
      case ')': tokens.push_back({TokenKind::kRParen, text.substr(i, 1), i}); ++i; continue;
      case '&': tokens.push_back({TokenKind::kAnd, text.substr(i, 1), i}); ++i; continue;
      case '|': tokens.push_back({TokenKind::kOr, text.substr(i, 1), i}); ++i; continue;
      case '!': tokens.push_back({TokenKind::kNot, text.substr(i, 1), i}); ++i; continue;
      default: break;
    }
    if (!IsIdentStart(ch)) {
      throw ParseError(i, std::string("unexpected character '") + ch + "'");
    }
    std::size_t end = i + 1;
    while (end < text.size() && IsIdentChar(text[end])) ++end;
    std::string_view word = text.substr(i, end - i);
    TokenKind kind = TokenKind::kIdent;
    if (word == "and") kind = TokenKind::kAnd;
    if (word == "or") kind = TokenKind::kOr;
    if (word == "not") kind = TokenKind::kNot;
    tokens.push_back({kind, word, i});
    i = end;
  }
  tokens.push_back({TokenKind::kEnd, {}, text.size()});
  return tokens;
}

class Parser {
 public:
  Parser(std::string_view text, const Universe& universe)
      : tokens_(Tokenize(text)), universe_(universe) {}

  Expr Parse() {
    Expr expr = ParseOr();
    if (Peek().kind != TokenKind::kEnd) Fail("end of input");
    return expr;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Take() { return tokens_[pos_++]; }

  [[noreturn]] void Fail(const char* expected) const {
    const Token& token = Peek();
    std::string found = token.kind == TokenKind::kEnd
                            ? "end of input"
                            : "'" + std::string(token.text) + "'";
    throw ParseError(token.position,
                     std::string("expected ") + expected + ", found " + found);
  }

  Expr ParseOr() {
    std::vector<Expr> operands;
    operands.push_back(ParseAnd());
    while (Peek().kind == TokenKind::kOr) {
      Take();
      operands.push_back(ParseAnd());
    }
    if (operands.size() == 1) return std::move(operands.front());
    return Expr::Or(std::move(operands));
  }

  Expr ParseAnd() {
    std::vector<Expr> operands;
    operands.push_back(ParseUnary());
    while (Peek().kind == TokenKind::kAnd) {
      Take();
      operands.push_back(ParseUnary());
    }
    if (operands.size() == 1) return std::move(operands.front());
    return Expr::And(std::move(operands));
  }

  Expr ParseUnary() {
    const Token& token = Peek();
    switch (token.kind) {
      case TokenKind::kNot:
        Take();
        return Expr::Not(ParseUnary());
      case TokenKind::kLParen: {
        Take();
        Expr inner = ParseOr();
        if (Peek().kind != TokenKind::kRParen) Fail("')'");
        Take();
        return inner;
      }
      case TokenKind::kIdent: {
        Take();
        auto index = universe_.IndexOf(token.text);
        if (!index) throw UnknownIdentifier(std::string(token.text));
        return Expr::Var(std::string(token.text), *index);
      }
      default:
        Fail("identifier, 'not' or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Universe& universe_;
};

Expr MakeNary(Expr::Kind kind, std::vector<Expr> children) {
  Expr node;
  node.kind = kind;
  for (Expr& child : children) {
    if (child.kind == kind) {
      for (Expr& grandchild : child.children) {
        node.children.push_back(std::move(grandchild));
      }
    } else {
      node.children.push_back(std::move(child));
    }
  }
  if (node.children.size() < 2) {
    throw DomainError("AND/OR nodes need at least two children");
  }
  return node;
}

void RenderInto(const Expr& expr, std::string& out);

void RenderChild(const Expr& child, bool parenthesize, std::string& out) {
  if (parenthesize) out += '(';
  RenderInto(child, out);
  if (parenthesize) out += ')';
}

void RenderInto(const Expr& expr, std::string& out) {
  switch (expr.kind) {
    case Expr::Kind::kVar:
      out += expr.name;
      return;
    case Expr::Kind::kNot: {
      out += "not ";
      const Expr& child = expr.children.front();
      RenderChild(child,
                  child.kind == Expr::Kind::kAnd || child.kind == Expr::Kind::kOr,
                  out);
      return;
    }
    case Expr::Kind::kAnd:
    case Expr::Kind::kOr: {
      const bool is_and = expr.kind == Expr::Kind::kAnd;
      for (std::size_t i = 0; i < expr.children.size(); ++i) {
        if (i > 0) out += is_and ? " and " : " or ";
        const Expr& child = expr.children[i];
        // Children never share the parent's kind (flattened), so only an OR
        // under an AND needs parentheses.
        RenderChild(child, is_and && child.kind == Expr::Kind::kOr, out);
      }
      return;
    }
  }
}

}  // namespace

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw DomainError("universe must not be empty");
  if (names_.size() > kMaxUniverseSize) {
    throw DomainError("universe holds at most " +
                      std::to_string(kMaxUniverseSize) + " names");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!IsIdentifier(names_[i]) || IsKeyword(names_[i])) {
      throw DomainError("invalid holder name '" + names_[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw DomainError("duplicate holder name '" + names_[i] + "'");
      }
    }
  }
}

Universe Universe::FromCsv(std::string_view csv) {
  std::vector<std::string> names;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = csv.find(',', start);
    std::string_view item = Trim(csv.substr(start, comma - start));
    names.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Universe(std::move(names));
}

std::optional<std::size_t> Universe::IndexOf(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Group Group::Of(std::initializer_list<std::size_t> members) {
  Group group;
  for (std::size_t member : members) group = group.With(member);
  return group;
}

std::size_t Group::size() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<std::size_t> Group::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::strong_ordering operator<=>(Group a, Group b) {
  if (auto cmp = a.size() <=> b.size(); cmp != 0) return cmp;
  // Same size: the group whose lowest differing member is smaller sorts
  // first.
  const std::uint32_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  const std::uint32_t lowest = diff & (~diff + 1);
  return (a.bits_ & lowest) ? std::strong_ordering::less
                            : std::strong_ordering::greater;
}

Group MakeGroup(const Universe& universe,
                std::initializer_list<std::string_view> names) {
  Group group;
  for (std::string_view name : names) {
    auto index = universe.IndexOf(name);
    if (!index) throw UnknownIdentifier(std::string(name));
    group = group.With(*index);
  }
  return group;
}

Group MakeGroup(const Universe& universe,
                const std::vector<std::string>& names) {
  Group group;
  for (const std::string& name : names) {
    auto index = universe.IndexOf(name);
    if (!index) throw UnknownIdentifier(name);
    group = group.With(*index);
  }
  return group;
}

std::string FormatGroup(Group group, const Universe& universe) {
  const bool compact = std::all_of(
      universe.names().begin(), universe.names().end(),
      [](const std::string& name) { return name.size() == 1; });
  std::string out = compact ? "" : "{";
  bool first = true;
  for (std::size_t member : group.members()) {
    if (!compact && !first) out += ',';
    out += universe.name(member);
    first = false;
  }
  if (!compact) out += '}';
  return out;
}

std::string FormatFamily(const GroupFamily& family, const Universe& universe) {
  std::string out;
  for (Group group : family) {
    if (!out.empty()) out += ", ";
    out += FormatGroup(group, universe);
  }
  return out;
}

Expr Expr::Var(std::string name, std::size_t holder) {
  Expr node;
  node.kind = Kind::kVar;
  node.name = std::move(name);
  node.holder = holder;
  return node;
}

Expr Expr::And(std::vector<Expr> children) {
  return MakeNary(Kind::kAnd, std::move(children));
}

Expr Expr::Or(std::vector<Expr> children) {
  return MakeNary(Kind::kOr, std::move(children));
}

Expr Expr::Not(Expr child) {
  Expr node;
  node.kind = Kind::kNot;
  node.children.push_back(std::move(child));
  return node;
}

Expr ParsePolicy(std::string_view text, const Universe& universe) {
  return Parser(text, universe).Parse();
}

std::string Render(const Expr& expr) {
  std::string out;
  RenderInto(expr, out);
  return out;
}

bool Evaluate(const Expr& expr, Group present) {
  switch (expr.kind) {
    case Expr::Kind::kVar:
      return present.contains(expr.holder);
    case Expr::Kind::kNot:
      return !Evaluate(expr.children.front(), present);
    case Expr::Kind::kAnd:
      return std::all_of(expr.children.begin(), expr.children.end(),
                         [&](const Expr& c) { return Evaluate(c, present); });
    case Expr::Kind::kOr:
      return std::any_of(expr.children.begin(), expr.children.end(),
                         [&](const Expr& c) { return Evaluate(c, present); });
  }
  return false;
}

bool IsMonotone(const Expr& expr) {
  if (expr.kind == Expr::Kind::kNot) return false;
  return std::all_of(expr.children.begin(), expr.children.end(), IsMonotone);
}

Group Variables(const Expr& expr) {
  if (expr.kind == Expr::Kind::kVar) return Group().With(expr.holder);
  Group all;
  for (const Expr& child : expr.children) {
    all = Group(all.bits() | Variables(child).bits());
  }
  return all;
}

GroupFamily AuthorizedFamily(const Expr& expr, const Universe& universe,
                             std::optional<std::size_t> max_size) {
  if (universe.size() > kMaxUniverseSize) {
    throw DomainError("universe too large to enumerate");
  }
  GroupFamily family;
  const std::uint32_t limit = std::uint32_t{1} << universe.size();
  for (std::uint32_t bits = 1; bits < limit; ++bits) {
    Group group(bits);
    if (max_size && group.size() > *max_size) continue;
    if (Evaluate(expr, group)) family.insert(group);
  }
  return family;
}

GroupFamily MinimalSets(const GroupFamily& family) {
  GroupFamily minimal;
  for (Group group : family) {
    const bool has_proper_subset =
        std::any_of(family.begin(), family.end(), [&](Group other) {
          return other != group && other.IsSubsetOf(group);
        });
    if (!has_proper_subset) minimal.insert(group);
  }
  return minimal;
}

}  // namespace groupauth
