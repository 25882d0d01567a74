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

#include <random>

#include <gtest/gtest.h>

#include "groupauth/errors.h"
#include "oracle.h"

namespace groupauth {
namespace {

const Universe kFive({"A", "B", "C", "D", "E"});
constexpr std::string_view kAirplane =
    "(A and B) or ((A or B) and (C or D or E))";

Expr V(const Universe& u, const std::string& name) {
  return Expr::Var(name, *u.IndexOf(name));
}

Group G(std::string_view letters) {
  Group g;
  for (char ch : letters) g = g.With(static_cast<std::size_t>(ch - 'A'));
  return g;
}

TEST(ParseTest, AirplanePolicy) {
  const Expr expected = Expr::Or(
      {Expr::And({V(kFive, "A"), V(kFive, "B")}),
       Expr::And({Expr::Or({V(kFive, "A"), V(kFive, "B")}),
                  Expr::Or({V(kFive, "C"), V(kFive, "D"), V(kFive, "E")})})});
  EXPECT_EQ(ParsePolicy(kAirplane, kFive), expected);
}

TEST(ParseTest, SmallPolicy) {
  const Universe u({"A1", "A2", "A3"});
  const Expr expected = Expr::Or({Expr::And({V(u, "A1"), V(u, "A2")}),
                                  Expr::And({V(u, "A1"), V(u, "A3")})});
  EXPECT_EQ(ParsePolicy("(A1 and A2) or (A1 and A3)", u), expected);
}

TEST(ParseTest, TrailingOperatorReportsEndOfInput) {
  try {
    ParsePolicy("A and", kFive);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
    EXPECT_NE(std::string(e.what()).find("end of input"), std::string::npos);
  }
}

TEST(ParseTest, SyntaxErrorsCarryPositions) {
  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      ParsePolicy(text, kFive);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string_view::npos;
  };
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("A B"), 2u);
  EXPECT_EQ(position_of("(A or B"), 7u);
  EXPECT_EQ(position_of(")"), 0u);
  EXPECT_EQ(position_of("A and $"), 6u);
  EXPECT_EQ(position_of("A or or B"), 5u);
}

TEST(ParseTest, UnknownIdentifier) {
  try {
    ParsePolicy("A and Z", kFive);
    FAIL();
  } catch (const UnknownIdentifier& e) {
    EXPECT_EQ(e.name(), "Z");
  }
}

TEST(ParseTest, PrecedenceAndFlattening) {
  EXPECT_EQ(ParsePolicy("A or B and C", kFive),
            Expr::Or({V(kFive, "A"),
                      Expr::And({V(kFive, "B"), V(kFive, "C")})}));
  EXPECT_EQ(ParsePolicy("not A and B", kFive),
            Expr::And({Expr::Not(V(kFive, "A")), V(kFive, "B")}));
  EXPECT_EQ(ParsePolicy("(A & B) & C", kFive),
            ParsePolicy("A and B and C", kFive));
  EXPECT_EQ(ParsePolicy("A | (B | C)", kFive).children.size(), 3u);
  EXPECT_EQ(ParsePolicy("!!A", kFive),
            Expr::Not(Expr::Not(V(kFive, "A"))));
}

TEST(RenderTest, CanonicalText) {
  EXPECT_EQ(Render(ParsePolicy(kAirplane, kFive)),
            "A and B or (A or B) and (C or D or E)");
  EXPECT_EQ(Render(ParsePolicy("!(A | B) & C", kFive)),
            "not (A or B) and C");
  EXPECT_EQ(Render(ParsePolicy("not (not A)", kFive)), "not not A");
}

TEST(RenderTest, RoundTripProperty) {
  std::mt19937 gen(1234);
  for (int i = 0; i < 500; ++i) {
    const oracle::Node node = oracle::RandomNode(gen, 5, 4, true);
    const Expr expr = ParsePolicy(oracle::Text(node, kFive.names()), kFive);
    ASSERT_EQ(ParsePolicy(Render(expr), kFive), expr) << Render(expr);
  }
}

TEST(EvaluateTest, Examples) {
  const Expr airplane = ParsePolicy(kAirplane, kFive);
  EXPECT_TRUE(Evaluate(airplane, G("AC")));
  EXPECT_FALSE(Evaluate(airplane, G("CD")));
  EXPECT_FALSE(Evaluate(airplane, Group()));
  EXPECT_TRUE(Evaluate(ParsePolicy("not A", kFive), Group()));
}

TEST(EvaluateTest, MonotoneProperty) {
  std::mt19937 gen(99);
  for (int i = 0; i < 200; ++i) {
    const oracle::Node node = oracle::RandomNode(gen, 5, 4, false);
    const Expr expr = ParsePolicy(oracle::Text(node, kFive.names()), kFive);
    for (std::uint32_t g = 0; g < 32; ++g) {
      if (!Evaluate(expr, Group(g))) continue;
      for (std::size_t extra = 0; extra < 5; ++extra) {
        ASSERT_TRUE(Evaluate(expr, Group(g).With(extra)));
      }
    }
  }
}

TEST(IsMonotoneTest, Examples) {
  EXPECT_TRUE(IsMonotone(ParsePolicy(kAirplane, kFive)));
  EXPECT_FALSE(IsMonotone(ParsePolicy("A and not B", kFive)));
  EXPECT_FALSE(IsMonotone(ParsePolicy("not (not A)", kFive)));
}

TEST(AuthorizedFamilyTest, AirplaneWithSeatingCapacity) {
  const GroupFamily family =
      AuthorizedFamily(ParsePolicy(kAirplane, kFive), kFive, 3);
  const GroupFamily expected = {
      G("AB"),  G("AC"),  G("AD"),  G("AE"),  G("BC"),  G("BD"),
      G("BE"),  G("ABC"), G("ABD"), G("ABE"), G("ACD"), G("ACE"),
      G("ADE"), G("BCD"), G("BCE"), G("BDE")};
  EXPECT_EQ(family, expected);
  EXPECT_EQ(family.size(), 16u);
  EXPECT_EQ(FormatFamily(family, kFive),
            "AB, AC, AD, AE, BC, BD, BE, ABC, ABD, ABE, ACD, ACE, ADE, BCD, "
            "BCE, BDE");
}

TEST(AuthorizedFamilyTest, AirplaneWithoutCapacityAdmitsLargerGroups) {
  const GroupFamily family =
      AuthorizedFamily(ParsePolicy(kAirplane, kFive), kFive);
  EXPECT_TRUE(family.count(G("ABCD")));
  EXPECT_TRUE(family.count(G("ABCDE")));
  EXPECT_FALSE(family.count(G("CDE")));
  EXPECT_EQ(MinimalSets(family),
            (GroupFamily{G("AB"), G("AC"), G("AD"), G("AE"), G("BC"), G("BD"),
                         G("BE")}));
}

TEST(AuthorizedFamilyTest, SingleConjunction) {
  const Universe u({"A1", "A2"});
  EXPECT_EQ(AuthorizedFamily(ParsePolicy("A1 and A2", u), u),
            GroupFamily{Group::Of({0, 1})});
}

TEST(AuthorizedFamilyTest, MatchesTruthTableProperty) {
  std::mt19937 gen(555);
  for (int i = 0; i < 300; ++i) {
    const int vars = std::uniform_int_distribution<int>(1, 5)(gen);
    std::vector<std::string> names(kFive.names().begin(),
                                   kFive.names().begin() + vars);
    const Universe u(names);
    const oracle::Node node = oracle::RandomNode(gen, vars, 4, i % 2 == 0);
    const Expr expr = ParsePolicy(oracle::Text(node, names), u);
    GroupFamily truth;
    for (std::uint32_t g = 1; g < (1U << vars); ++g) {
      if (oracle::Eval(node, g)) truth.insert(Group(g));
    }
    ASSERT_EQ(AuthorizedFamily(expr, u), truth) << oracle::Text(node, names);
  }
}

TEST(MinimalSetsTest, Examples) {
  EXPECT_EQ(MinimalSets({G("AB"), G("ABC")}), GroupFamily{G("AB")});
  EXPECT_TRUE(MinimalSets({}).empty());
  EXPECT_EQ(MinimalSets({G("A"), G("BC"), G("ABC")}),
            (GroupFamily{G("A"), G("BC")}));
}

TEST(UniverseTest, Validation) {
  EXPECT_THROW(Universe(std::vector<std::string>{}), DomainError);
  EXPECT_THROW(Universe({"A", "A"}), DomainError);
  EXPECT_THROW(Universe({"and"}), DomainError);
  EXPECT_THROW(Universe({"1A"}), DomainError);
  std::vector<std::string> many;
  for (int i = 0; i < 21; ++i) many.push_back("H" + std::to_string(i));
  EXPECT_THROW(Universe{many}, DomainError);
  many.pop_back();
  EXPECT_NO_THROW(Universe{many});
  EXPECT_EQ(Universe::FromCsv(" A, B ,C"), Universe({"A", "B", "C"}));
}

TEST(GroupTest, OrderingIsSizeThenLexicographic) {
  EXPECT_LT(G("AB"), G("AC"));
  EXPECT_LT(G("AE"), G("BC"));
  EXPECT_LT(G("BE"), G("ABC"));
  EXPECT_LT(G("ADE"), G("BCD"));
  EXPECT_EQ(FormatGroup(Group::Of({0, 2}), Universe({"A1", "A2", "A3"})),
            "{A1,A3}");
}

}  // namespace
}  // namespace groupauth
