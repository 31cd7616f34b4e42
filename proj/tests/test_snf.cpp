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
#include "trc/snf.hpp"

#include <gtest/gtest.h>

using namespace trc;

namespace {

std::vector<std::string> strs(const std::vector<SnfClause> &cs) {
  std::vector<std::string> out;
  for (auto &c : cs)
    out.push_back(c.str());
  return out;
}

std::vector<size_t> all(const Translation &t) {
  std::vector<size_t> v(t.clauses.size());
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = i;
  return v;
}

} // namespace

TEST(Snf, ClauseStrings) {
  EXPECT_EQ(parse_snf_clause("a").str(), "a");
  EXPECT_EQ(parse_snf_clause("false").str(), "false");
  EXPECT_EQ(parse_snf_clause("G(false)").str(), "G(false)");
  EXPECT_EQ(parse_snf_clause("G(~a | X b)").str(), "G(~a | X(b))");
  EXPECT_EQ(parse_snf_clause("G(b | ~a | X(c | a))").str(), "G(~a | b | X(a | c))");
  EXPECT_EQ(parse_snf_clause("G(F c)").str(), "G(F c)");
  EXPECT_EQ(parse_snf_clause("G(a | F ~c)").kind, ClauseKind::Eventuality);
  EXPECT_TRUE(parse_snf_clause("G(false)").is_empty());
  EXPECT_TRUE(parse_snf_clause("false").is_empty());
}

TEST(Snf, ParseFile) {
  auto cs = parse_snf("# comment\na\n\nG(~a | X b)  # trailing\n");
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[1].kind, ClauseKind::Global);
  try {
    parse_snf("a\nG(~a | \n");
    FAIL();
  } catch (const SnfParseError &e) {
    EXPECT_EQ(e.line, 2);
  }
  EXPECT_THROW(parse_snf_clause("G(a | F b | F c)"), std::runtime_error);
  EXPECT_THROW(parse_snf_clause("_w_c"), std::runtime_error);
  EXPECT_EQ(print_snf(cs), "a\nG(~a | X(b))\n");
}

TEST(Snf, TranslateGlobally) {
  auto t = translate(parse_ltl("G p"));
  EXPECT_EQ(strs(t.clauses),
            (std::vector<std::string>{"_x0", "G(~_x0 | X(_x0))", "G(~_x0 | p)"}));
  EXPECT_TRUE(t.occ.marks[1].empty());
  EXPECT_EQ(t.occ.marks[2], (std::vector<Mark>{{{0}, Slot::Now}}));
}

TEST(Snf, TranslateNextNot) {
  auto t = translate(parse_ltl("X ~p"));
  EXPECT_EQ(strs(t.clauses),
            (std::vector<std::string>{"_x0", "G(~_x0 | X(_x1))", "G(~_x1 | ~p)"}));
  EXPECT_EQ(t.occ.marks[1], (std::vector<Mark>{{{0}, Slot::Next}}));
  EXPECT_EQ(t.occ.marks[2], (std::vector<Mark>{{{0, 0}, Slot::Now}}));
}

TEST(Snf, TranslateConjunction) {
  auto t = translate(parse_ltl("(G p) & (X ~p)"));
  EXPECT_EQ(t.clauses.size(), 7u);
  EXPECT_EQ(t.occ.proxy.at({}), "_x0");
  EXPECT_EQ(t.occ.proxy.at({1, 0}), "_x3");
}

TEST(Snf, TranslateOperators) {
  EXPECT_EQ(strs(translate(parse_ltl("p U q")).clauses),
            (std::vector<std::string>{"_x0", "G(~_x0 | p | q)", "G(~_x0 | q | X(_x0))",
                                      "G(~_x0 | F q)"}));
  EXPECT_EQ(strs(translate(parse_ltl("p R q")).clauses),
            (std::vector<std::string>{"_x0", "G(~_x0 | q)", "G(~_x0 | p | X(_x0))"}));
  EXPECT_EQ(strs(translate(parse_ltl("p -> q")).clauses),
            (std::vector<std::string>{"_x0", "G(~_x0 | ~p | q)"}));
  EXPECT_EQ(strs(translate(parse_ltl("~(p -> q)")).clauses),
            (std::vector<std::string>{"_x0", "G(~_x0 | ~_x1)", "G(_x1 | p)", "G(_x1 | ~q)"}));
}

TEST(Snf, TranslateConstants) {
  EXPECT_TRUE(translate(parse_ltl("true")).clauses.empty());
  EXPECT_EQ(strs(translate(parse_ltl("false")).clauses), (std::vector<std::string>{"false"}));
  EXPECT_EQ(strs(translate(parse_ltl("F false")).clauses),
            (std::vector<std::string>{"_x0", "G(~_x0)"}));
  EXPECT_EQ(strs(translate(parse_ltl("p & true")).clauses),
            (std::vector<std::string>{"_x0", "G(~_x0 | p)"}));
}

// Equisatisfiability on sampled formulas: every word satisfying f extends to
// a model of the translation, so a witness for f forces a sat verdict.
TEST(Snf, TranslationAgreesWithWords) {
  Rng rng(5);
  const std::vector<std::string> props{"p", "q"};
  int sat_with_witness = 0, unsat = 0;
  for (int i = 0; i < 300; ++i) {
    Formula f = random_formula(rng, props, 3);
    auto t = translate(f);
    Verdict v = solve(t.clauses).verdict;
    bool witness = false;
    for (int k = 0; k < 200 && !witness; ++k)
      witness = eval_ltl(sample_word(rng, props), f);
    if (witness) {
      ++sat_with_witness;
      ASSERT_EQ(v, Verdict::Sat) << print_ltl(f);
    }
    unsat += v == Verdict::Unsat;
  }
  EXPECT_GT(sat_with_witness, 100);
  EXPECT_GT(unsat, 5);
}

TEST(Snf, MapFullCoreIsIdentity) {
  Formula f = parse_ltl("(G p) & (X ~p)");
  auto t = translate(f);
  EXPECT_EQ(map_uc_to_ltl(all(t), t.occ, f), f);
}

TEST(Snf, MapFalseRoot) {
  Formula f = parse_ltl("false");
  auto t = translate(f);
  EXPECT_EQ(map_uc_to_ltl({0}, t.occ, f), f);
}

TEST(Snf, MapDropsUnusedOperand) {
  Formula f = parse_ltl("(G p) & q");
  auto t = translate(f);
  std::vector<size_t> keep;
  for (size_t i = 0; i < t.clauses.size(); ++i) {
    bool uses_q = false;
    for (auto &l : t.clauses[i].now)
      uses_q = uses_q || l.name == "q";
    if (!uses_q)
      keep.push_back(i);
  }
  EXPECT_EQ(print_ltl(map_uc_to_ltl(keep, t.occ, f)), "(G p) & true");
}

TEST(Snf, MapReplacesByPolarity) {
  Formula f = parse_ltl("~q & (G p)");
  auto t = translate(f);
  // q sits below ~ and is negative, so it becomes false.
  std::vector<size_t> keep;
  for (size_t i = 0; i < t.clauses.size(); ++i) {
    bool uses_q = false;
    for (auto &l : t.clauses[i].now)
      uses_q = uses_q || l.name == "q";
    if (!uses_q)
      keep.push_back(i);
  }
  EXPECT_EQ(print_ltl(map_uc_to_ltl(keep, t.occ, f)), "(~false) & (G p)");
}

TEST(Snf, AnnotateAllNaturals) {
  Formula f = parse_ltl("(G p) & (X ~p)");
  auto t = translate(f);
  std::vector<AnnotatedClauseRef> refs;
  for (size_t i = 0; i < t.clauses.size(); ++i)
    refs.push_back({i, i == 0 ? SemilinearSet::singleton(0) : SemilinearSet::naturals()});
  auto a = annotate_ltl_uc(refs, t.occ, f, f);
  EXPECT_EQ(print_ltlp(a), "(G[N] p) &[N,N] (X[N+1] ~[N] p)");
}

TEST(Snf, WaitsForNames) {
  EXPECT_EQ(waits_for_name({"c", true}), "_w_c");
  EXPECT_EQ(waits_for_name({"c", false}), "_wn_c");
}
