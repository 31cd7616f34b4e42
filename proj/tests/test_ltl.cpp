//===----------------------------------------------------------------------===//
//
// Copyright 2026 Contributors to the trc project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
//===----------------------------------------------------------------------===//

#include "trc/ltl.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace trc;

namespace {

Formula p(const char *n) { return Formula::prop(n); }

// Tree walk collecting every occurrence path.
void occs(const Formula &f, OccId &cur, std::vector<OccId> &out) {
  out.push_back(cur);
  for (uint32_t i = 0; i < f.kids.size(); ++i) {
    cur.push_back(i);
    occs(f.kids[i], cur, out);
    cur.pop_back();
  }
}

Formula random_tree(std::mt19937_64 &rng, int depth) {
  static const char *names[] = {"p", "q", "r"};
  if (depth == 0 || rng() % 4 == 0) {
    int k = rng() % 5;
    if (k == 0)
      return Formula::constant(rng() % 2);
    return p(names[rng() % 3]);
  }
  static const Op un[] = {Op::Not, Op::Next, Op::Finally, Op::Globally};
  static const Op bin[] = {Op::And, Op::Or, Op::Implies, Op::Until, Op::Release};
  if (rng() % 2)
    return Formula::unary(un[rng() % 4], random_tree(rng, depth - 1));
  return Formula::binary(bin[rng() % 5], random_tree(rng, depth - 1),
                         random_tree(rng, depth - 1));
}

} // namespace

TEST(Ltl, ParseShapes) {
  EXPECT_EQ(parse_ltl("(G p) & (X ~p)"),
            Formula::binary(Op::And, Formula::unary(Op::Globally, p("p")),
                            Formula::unary(Op::Next, Formula::unary(Op::Not, p("p")))));
  EXPECT_EQ(parse_ltl("true"), Formula::constant(true));
  EXPECT_EQ(parse_ltl("p U (q R r)"),
            Formula::binary(Op::Until, p("p"), Formula::binary(Op::Release, p("q"), p("r"))));
}

TEST(Ltl, Precedence) {
  EXPECT_EQ(parse_ltl("a | b & c"), parse_ltl("a | (b & c)"));
  EXPECT_EQ(parse_ltl("a -> b -> c"), parse_ltl("a -> (b -> c)"));
  EXPECT_EQ(parse_ltl("a U b U c"), parse_ltl("a U (b U c)"));
  EXPECT_EQ(parse_ltl("a & b U c"), parse_ltl("a & (b U c)"));
  EXPECT_EQ(parse_ltl("G p U q"), parse_ltl("(G p) U q"));
  EXPECT_EQ(parse_ltl("a | b -> c"), parse_ltl("(a | b) -> c"));
}

TEST(Ltl, ParseErrors) {
  EXPECT_THROW(parse_ltl("p &"), ParseError);
  EXPECT_THROW(parse_ltl("(p"), ParseError);
  EXPECT_THROW(parse_ltl("_x1"), ParseError);
  EXPECT_NO_THROW(parse_ltl("_x1", ParseOptions{true}));
  try {
    parse_ltl("p &\n  & q");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line, 2);
  }
}

TEST(Ltl, Polarity) {
  EXPECT_EQ(polarity_of(parse_ltl("G ~p"), {0, 0}), Polarity::Negative);
  EXPECT_EQ(polarity_of(parse_ltl("~~p"), {0, 0}), Polarity::Positive);
  EXPECT_EQ(polarity_of(parse_ltl("p -> q"), {0}), Polarity::Negative);
  EXPECT_EQ(polarity_of(parse_ltl("p -> q"), {1}), Polarity::Positive);
  EXPECT_EQ(polarity_of(parse_ltl("~(p U q)"), {0, 1}), Polarity::Negative);
  EXPECT_EQ(polarity_of(parse_ltl("p"), {}), Polarity::Positive);
}

TEST(Ltl, OccurrenceStrings) {
  EXPECT_EQ(occ_str({}), "root");
  EXPECT_EQ(occ_str({0, 1}), "0.1");
  Formula f = parse_ltl("(G p) & (X ~p)");
  EXPECT_EQ(at(f, {1, 0, 0}), p("p"));
  EXPECT_EQ(f.size(), 6u);
}

TEST(Ltl, AnnotatedPrinting) {
  auto core = parse_ltlp("(G[{1}] p) &[{0},{0}] (X[{1}] ~[{1}] p)");
  EXPECT_EQ(print_ltlp(core), "(G[{1}] p) &[{0},{0}] (X[{1}] ~[{1}] p)");
  EXPECT_EQ(core.kids[0].sets[0], SemilinearSet::singleton(1));
  auto all = AnnotatedFormula::with_sets(parse_ltl("G(F c)"), SemilinearSet::naturals());
  EXPECT_EQ(print_ltlp(all), "G[N](F[N] c)");
  auto last = parse_ltlp("G[{0}](F[N] c)");
  EXPECT_EQ(print_ltlp(last), "G[{0}](F[N] c)");
  EXPECT_EQ(parse_ltlp("G p").kids[0].op, Op::Prop);
  EXPECT_EQ(parse_ltlp("G p").sets[0], SemilinearSet::naturals());
}

TEST(Ltl, AnnotatedSemanticEquality) {
  auto a = parse_ltlp("G[2N u 2N+1] p");
  auto b = parse_ltlp("G[N] p");
  EXPECT_TRUE(a.same(b));
  EXPECT_FALSE(parse_ltlp("G[2N] p").same(b));
  EXPECT_EQ(a.strip(), parse_ltl("G p"));
}

// Printing then reparsing is the identity and keeps every occurrence id valid.
TEST(Ltl, RoundTripRandom) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 3000; ++i) {
    Formula f = random_tree(rng, 5);
    std::string s = print_ltl(f);
    Formula g = parse_ltl(s);
    ASSERT_EQ(f, g) << s;
    std::vector<OccId> a, b;
    OccId cur;
    occs(f, cur, a);
    occs(g, cur, b);
    ASSERT_EQ(a, b);
    for (auto &o : a)
      ASSERT_EQ(at(f, o).op, at(g, o).op);
    auto ann = AnnotatedFormula::with_sets(f, SemilinearSet::parse("2N+1"));
    ASSERT_TRUE(parse_ltlp(print_ltlp(ann)).same(ann)) << print_ltlp(ann);
  }
}

TEST(Ltl, Identifiers) {
  EXPECT_TRUE(is_identifier("b_1"));
  EXPECT_FALSE(is_identifier("1b"));
  EXPECT_FALSE(is_identifier(""));
  std::vector<std::string> props;
  collect_props(parse_ltl("p U (q & X p)"), props);
  EXPECT_EQ(props, (std::vector<std::string>{"p", "q"}));
}
