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

#include "trc/engine.hpp"
#include "trc/oracle.hpp"

#include <gtest/gtest.h>

using namespace trc;

namespace {

LassoWord W(const char *s) { return LassoWord::parse(s); }

// Explicit unrolled evaluation of a finite-horizon property on a lasso,
// independent of the fixpoint evaluator: G p and F p at position 0.
bool globally_p(const LassoWord &w) {
  for (size_t i = 0; i < w.prefix.size() + w.loop.size(); ++i)
    if (!w.at(i).count("p"))
      return false;
  return true;
}
bool finally_p(const LassoWord &w) {
  for (size_t i = 0; i < w.prefix.size() + w.loop.size(); ++i)
    if (w.at(i).count("p"))
      return true;
  return false;
}

// Empties the operand set that annotates the occurrence occ.
AnnotatedFormula empty_at(const AnnotatedFormula &a, const OccId &occ, size_t depth = 0) {
  AnnotatedFormula r = a;
  if (depth + 1 == occ.size()) {
    r.sets[occ[depth]] = SemilinearSet::empty();
    return r;
  }
  r.kids[occ[depth]] = empty_at(a.kids[occ[depth]], occ, depth + 1);
  return r;
}

Formula replace_at(const Formula &f, const OccId &occ, const Formula &c, size_t depth = 0) {
  if (depth == occ.size())
    return c;
  Formula r = f;
  r.kids[occ[depth]] = replace_at(f.kids[occ[depth]], occ, c, depth + 1);
  return r;
}

void occurrences(const Formula &f, OccId &cur, std::vector<OccId> &out) {
  if (!cur.empty())
    out.push_back(cur);
  for (uint32_t i = 0; i < f.kids.size(); ++i) {
    cur.push_back(i);
    occurrences(f.kids[i], cur, out);
    cur.pop_back();
  }
}

// Weakens every set of a to a random superset.
AnnotatedFormula widen(Rng &rng, const AnnotatedFormula &a) {
  AnnotatedFormula r = a;
  for (auto &s : r.sets)
    if (rng() % 2)
      s = s.unite(SemilinearSet::progression(below(rng, 4), 1 + below(rng, 3)));
  for (auto &k : r.kids)
    k = widen(rng, k);
  return r;
}

AnnotatedFormula random_sets(Rng &rng, const Formula &f) {
  static const char *pool[] = {"N", "{0}", "2N", "2N+1", "{1,2}", "N+1", "{}", "3N+2"};
  AnnotatedFormula a{f.op, f.name, {}, {}};
  for (auto &k : f.kids) {
    a.kids.push_back(random_sets(rng, k));
    a.sets.push_back(SemilinearSet::parse(pool[below(rng, 8)]));
  }
  return a;
}

} // namespace

TEST(Oracle, WordSyntax) {
  auto w = W("{p,q}.{}.{p} ; {p}.{q}");
  EXPECT_EQ(w.prefix.size(), 3u);
  EXPECT_EQ(w.loop.size(), 2u);
  EXPECT_EQ(w.at(3), Letter{"p"});
  EXPECT_EQ(w.at(6), Letter{"q"});
  EXPECT_EQ(W(w.str().c_str()).str(), w.str());
  EXPECT_EQ(W("; {p}").prefix.size(), 0u);
  EXPECT_THROW(W("{p} ;"), std::exception);
}

TEST(Oracle, LtlBasics) {
  EXPECT_TRUE(eval_ltl(W("; {p}"), parse_ltl("G p")));
  EXPECT_TRUE(eval_ltl(W("{p} ; {}"), parse_ltl("F p")));
  EXPECT_FALSE(eval_ltl(W("{p} ; {}"), parse_ltl("G F p")));
  EXPECT_TRUE(eval_ltl(W("{} ; {p}.{}"), parse_ltl("G F p & G F ~p")));
  EXPECT_TRUE(eval_ltl(W("{p}.{p}.{q} ; {}"), parse_ltl("p U q")));
  EXPECT_FALSE(eval_ltl(W("; {p}"), parse_ltl("p U q")));
  EXPECT_TRUE(eval_ltl(W("; {p}"), parse_ltl("q R p")));
  EXPECT_TRUE(eval_ltl(W("{}.{p} ; {}"), parse_ltl("X p")));
}

TEST(Oracle, UnsatFormulaOnSampledWords) {
  Rng rng(1);
  Formula f = parse_ltl("(G p) & (X ~p)");
  auto core = parse_ltlp("(G[{1}] p) &[{0},{0}] (X[{1}] ~[{1}] p)");
  for (int i = 0; i < 1000; ++i) {
    auto w = sample_word(rng, {"p"});
    ASSERT_FALSE(eval_ltl(w, f));
    ASSERT_FALSE(eval_ltlp(w, core));
  }
}

TEST(Oracle, GloballyFinallyUnrolled) {
  Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    auto w = sample_word(rng, {"p"});
    ASSERT_EQ(eval_ltl(w, parse_ltl("G p")), globally_p(w)) << w.str();
    ASSERT_EQ(eval_ltl(w, parse_ltl("F p")), finally_p(w)) << w.str();
  }
}

TEST(Oracle, Masking) {
  // Only even positions of p matter under G; p fails at 1.
  auto a = parse_ltlp("G[2N] p");
  EXPECT_TRUE(eval_ltlp(W("{p}.{} ; {p}.{}"), a));
  EXPECT_FALSE(eval_ltl(W("{p}.{} ; {p}.{}"), a.strip()));
  // Empty set on a negative operand makes it false, here ~p under ~ at all points.
  EXPECT_TRUE(eval_ltlp(W("; {p}"), parse_ltlp("G[N] ~[{}] p")));
  // Implicit negation of the left operand of ->.
  EXPECT_TRUE(eval_ltlp(W("; {p}"), parse_ltlp("G[N] (p ->[{},N] false)")));
  EXPECT_FALSE(eval_ltlp(W("; {p}"), parse_ltlp("G[N] (p ->[N,N] false)")));
  EXPECT_TRUE(eval_ltlp(W("; {p}"), parse_ltlp("G[N] (p ->[N,{}] false)")));
}

TEST(Oracle, MaskedPositionInEvenSteps) {
  auto a = parse_ltlp("p &[{0},{0}] (G[2N](p ->[2N,2N] (X[2N+1](X[2N+2] p))))");
  // p at 0, 1 and every even point: the implication fails only at 1.
  auto w = W("{p}.{p} ; {p}.{}");
  EXPECT_TRUE(eval_ltlp(w, a));
  EXPECT_FALSE(eval_ltl(w, a.strip()));
  auto core = parse_ltlp(
      "p &[{0},{0}] ((G[2N](p ->[2N,2N] (X[2N+1](X[2N+2] p)))) &[{0},{0}] "
      "(F[N]((~[2N] p) &[2N,2N+1] (X[2N+2] ~[2N+2] p))))");
  EXPECT_FALSE(eval_ltlp(w, core));
}

TEST(Oracle, MaskingProperties) {
  Rng rng(9);
  const std::vector<std::string> props{"p", "q"};
  for (int i = 0; i < 300; ++i) {
    Formula f = random_formula(rng, props, 3);
    auto w = sample_word(rng, props);
    // All sets N is plain LTL.
    ASSERT_EQ(eval_ltlp(w, AnnotatedFormula::with_sets(f, SemilinearSet::naturals())),
              eval_ltl(w, f))
        << print_ltl(f) << " on " << w.str();
    // Empty set at an occurrence is its polarity constant.
    std::vector<OccId> occ;
    OccId cur;
    occurrences(f, cur, occ);
    if (!occ.empty()) {
      OccId o = occ[below(rng, occ.size())];
      bool pos = polarity_of(f, o) == Polarity::Positive;
      auto full = AnnotatedFormula::with_sets(f, SemilinearSet::naturals());
      auto emptied = empty_at(full, o);
      Formula replaced = replace_at(f, o, Formula::constant(pos));
      ASSERT_EQ(eval_ltlp(w, emptied), eval_ltl(w, replaced))
          << print_ltl(f) << " at " << occ_str(o);
    }
    // Widening sets only strengthens.
    auto chi = random_sets(rng, f);
    auto theta = widen(rng, chi);
    if (eval_ltlp(w, theta))
      ASSERT_TRUE(eval_ltlp(w, chi)) << print_ltlp(chi) << " vs " << print_ltlp(theta);
  }
}

TEST(Oracle, BruteforceParikh) {
  UnaryNfa n;
  n.states = 1;
  n.initial = {0};
  n.ones = {{0, 0}};
  auto rows = parikh_bruteforce(n, 5);
  EXPECT_EQ(rows[0], (std::vector<char>(6, 1)));
}

TEST(Oracle, InstancesDeterministic) {
  auto a = sample_instances(7, 20, Profile::UnsatByConstruction);
  auto b = sample_instances(7, 20, Profile::UnsatByConstruction);
  ASSERT_EQ(a.size(), 20u);
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].text(), b[i].text());
  }
  EXPECT_NE(sample_instances(8, 1, Profile::RandomClauses)[0].text(),
            sample_instances(7, 1, Profile::RandomClauses)[0].text());
}

TEST(Oracle, UnsatProfile) {
  for (auto &x : sample_instances(7, 50, Profile::UnsatByConstruction)) {
    ASSERT_TRUE(x.is_ltl);
    EXPECT_EQ(solve(translate(x.formula).clauses).verdict, Verdict::Unsat) << x.text();
  }
}

TEST(Oracle, CounterProfile) {
  size_t with_ev = 0;
  for (auto &x : sample_instances(7, 20, Profile::Counters)) {
    ASSERT_FALSE(x.is_ltl);
    auto r = solve(x.clauses);
    EXPECT_EQ(r.verdict, Verdict::Unsat) << x.text();
    bool ev = false;
    for (auto &c : x.clauses)
      ev = ev || c.kind == ClauseKind::Eventuality;
    if (ev) {
      ++with_ev;
      EXPECT_GE(r.stats.loop_searches, 1u);
    }
  }
  EXPECT_GT(with_ev, 0u);
}

TEST(Oracle, ProfileNames) {
  EXPECT_EQ(parse_profile("unsat"), Profile::UnsatByConstruction);
  EXPECT_EQ(parse_profile("phltl"), Profile::Counters);
  EXPECT_STREQ(profile_name(Profile::RandomClauses), "random-clauses");
  EXPECT_THROW(parse_profile("nope"), std::invalid_argument);
}
