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

#include "trc/oracle.hpp"
#include "trc/timepoints.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace trc;
using S = SemilinearSet;

namespace {

const char *kAlternating = "a\nG(~a | X b)\nG(~b | X a)\nG(~a | ~c)\nG(~c | X ~a)\nG(F c)\n";

struct Run {
  std::vector<SnfClause> cs;
  ResolutionGraph g;
  Subgraph sub;
  VertexLabels labels;
};

Run run(const char *text) {
  Run x;
  x.cs = parse_snf(text);
  auto r = solve(x.cs);
  x.g = build_graph(r.log, x.cs.size());
  x.sub = backward_subgraph(x.g);
  x.labels = label_vertices(x.sub);
  return x;
}

const S &label_of(const Run &x, const std::string &clause) {
  for (uint32_t v : x.sub.vertices)
    if (x.g.vertices[v].partition == kMainPartition && x.g.vertices[v].start_index >= 0 &&
        x.g.vertices[v].clause.str() == clause)
      return x.labels.at(v);
  throw std::runtime_error("no vertex " + clause);
}

std::vector<std::pair<uint32_t, uint32_t>> sorted(std::vector<std::pair<uint32_t, uint32_t>> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST(Timepoints, SingleVertex) {
  Subgraph sub;
  sub.member = {1};
  sub.vertices = {0};
  sub.root = 0;
  UnaryNfa n = to_unary_nfa(sub);
  EXPECT_EQ(n.states, 1u);
  EXPECT_TRUE(n.ones.empty());
  EXPECT_TRUE(n.eps.empty());
  auto sets = parikh_all_states(n);
  EXPECT_EQ(sets[0], S::singleton(0));
}

TEST(Timepoints, ChainIsEpsilon) {
  Subgraph sub;
  sub.member = {1, 1};
  sub.vertices = {0, 1};
  sub.edges = {{1, 0, 0}};
  sub.root = 0;
  UnaryNfa n = to_unary_nfa(sub);
  EXPECT_EQ(n.eps, (std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}}));
  EXPECT_EQ(n.initial, (std::vector<uint32_t>{0}));
}

TEST(Timepoints, EpsilonCycleSharesOne) {
  UnaryNfa n;
  n.states = 3;
  n.initial = {0};
  n.eps = {{0, 1}, {1, 0}};
  n.ones = {{1, 2}};
  UnaryNfa f = epsilon_free(n);
  EXPECT_TRUE(f.epsilon_free());
  EXPECT_EQ(sorted(f.ones), (std::vector<std::pair<uint32_t, uint32_t>>{{0, 2}, {1, 2}}));
  EXPECT_EQ(f.initial, (std::vector<uint32_t>{0, 1}));
}

TEST(Timepoints, EpsilonFreeIdentity) {
  UnaryNfa n;
  n.states = 2;
  n.initial = {0};
  n.ones = {{0, 1}, {1, 0}};
  UnaryNfa f = epsilon_free(n);
  EXPECT_EQ(sorted(f.ones), sorted(n.ones));
  EXPECT_EQ(f.initial, n.initial);
}

TEST(Timepoints, SelfLoop) {
  UnaryNfa n;
  n.states = 1;
  n.initial = {0};
  n.ones = {{0, 0}};
  EXPECT_EQ(parikh_all_states(n)[0], S::naturals());
  EXPECT_EQ(parikh_all_states(n, ParikhAlgorithm::Layered)[0], S::naturals());
}

TEST(Timepoints, TwoCycle) {
  UnaryNfa n;
  n.states = 2;
  n.initial = {0};
  n.ones = {{0, 1}, {1, 0}};
  auto s = parikh_all_states(n);
  EXPECT_EQ(s[0], S::parse("2N"));
  EXPECT_EQ(s[1], S::parse("2N+1"));
  auto rows = parikh_bruteforce(n, 6);
  EXPECT_EQ(rows[0], (std::vector<char>{1, 0, 1, 0, 1, 0, 1}));
  EXPECT_EQ(rows[1], (std::vector<char>{0, 1, 0, 1, 0, 1, 0}));
}

TEST(Timepoints, Unreachable) {
  UnaryNfa n;
  n.states = 2;
  n.initial = {0};
  EXPECT_TRUE(parikh_all_states(n)[1].is_empty());
}

TEST(Timepoints, AlternatingLabels) {
  auto x = run(kAlternating);
  EXPECT_EQ(label_of(x, "a"), S::singleton(0));
  EXPECT_EQ(label_of(x, "G(F c)"), S::singleton(0));
  EXPECT_TRUE(label_of(x, "G(~a | X(b))").equals(S::parse("2N")));
  EXPECT_TRUE(label_of(x, "G(~b | X(a))").equals(S::parse("2N+1")));
  EXPECT_TRUE(label_of(x, "G(~a | ~c)").equals(S::parse("2N")));
  EXPECT_TRUE(label_of(x, "G(~c | X(~a))").equals(S::parse("2N+1")));
  EXPECT_EQ(x.labels.at(x.sub.root), S::singleton(0));
  EXPECT_TRUE(check_lemmas(x.g, x.sub, x.labels).empty());

  UnaryNfa n = to_unary_nfa(x.sub);
  EXPECT_EQ(n.ones.size(), 4u);
  UnaryNfa f = epsilon_free(n);
  EXPECT_GT(f.ones.size(), n.ones.size());
  // Brute-force rows agree with the labels.
  auto rows = parikh_bruteforce(f, 40);
  for (uint32_t s = 0; s < f.states; ++s)
    for (uint64_t k = 0; k <= 40; ++k)
      ASSERT_EQ(rows[s][k] != 0, x.labels.at(x.sub.vertices[s]).contains(k));
}

TEST(Timepoints, AllTimeZero) {
  auto x = run("a\n~a | b\n~b\n");
  for (auto &[v, s] : x.labels)
    EXPECT_EQ(s, S::singleton(0));
}

TEST(Timepoints, Rendering) {
  EXPECT_EQ(render_clause(parse_snf_clause("G(~c | X ~a)"), S::parse("2N+1")),
            "G[2N+1](~[2N+1]c | X[2N+2] ~[2N+2]a)");
  EXPECT_EQ(render_clause(parse_snf_clause("G(F c)"), S::singleton(0)), "G[{0}](F[N] c)");
  EXPECT_EQ(render_clause(parse_snf_clause("a"), S::singleton(0)), "a");
  EXPECT_EQ(render_clause(parse_snf_clause("G(~a | ~c)"), S::parse("2N")),
            "G[2N](~[2N]a | ~[2N]c)");
}

TEST(Timepoints, UcWithTimepoints) {
  auto x = run(kAlternating);
  auto uc = uc_with_timepoints(x.g, x.sub, x.labels);
  std::vector<std::string> sets;
  for (auto &u : uc)
    sets.push_back(u.set.str());
  EXPECT_EQ(sets, (std::vector<std::string>{"{0}", "2N", "2N+1", "2N", "2N+1", "{0}"}));
  std::vector<std::string> lines;
  for (auto &u : uc)
    lines.push_back(render_clause(u.clause, u.set));
  EXPECT_EQ(lines, (std::vector<std::string>{
                       "a",
                       "G[2N](~[2N]a | X[2N+1] b)",
                       "G[2N+1](~[2N+1]b | X[2N+2] a)",
                       "G[2N](~[2N]a | ~[2N]c)",
                       "G[2N+1](~[2N+1]c | X[2N+2] ~[2N+2]a)",
                       "G[{0}](F[N] c)",
                   }));
}

TEST(Timepoints, ConjoinTwoInitial) {
  auto x = run("a\n~a\n");
  auto uc = uc_with_timepoints(x.g, x.sub, x.labels);
  EXPECT_EQ(print_ltlp(conjoin(uc)), "a &[{0},{0}] (~[{0}] a)");
}

TEST(Timepoints, LemmaViolationDetected) {
  auto x = run(kAlternating);
  auto bad = x.labels;
  for (auto &[v, s] : bad)
    if (x.g.vertices[v].clause.str() == "a")
      s = S::parse("{1}");
  EXPECT_FALSE(check_lemmas(x.g, x.sub, bad).empty());
}

// Both algorithms against brute force on random ε-free NFAs, with the
// period and threshold bounds.
TEST(Timepoints, RandomNfaOracle) {
  Rng rng(29);
  for (int it = 0; it < 200; ++it) {
    UnaryNfa n = random_nfa(rng, 60);
    ASSERT_TRUE(n.epsilon_free());
    uint64_t bound = 4ull * n.states * n.states + 2ull * n.states;
    auto rows = parikh_bruteforce(n, bound);
    for (auto algo : {ParikhAlgorithm::Scc, ParikhAlgorithm::Layered}) {
      auto sets = parikh_all_states(n, algo);
      ASSERT_EQ(check_parikh_bounds(n, sets), "");
      for (uint32_t s = 0; s < n.states; ++s)
        for (uint64_t k = 0; k <= bound; ++k)
          ASSERT_EQ(sets[s].contains(k), rows[s][k] != 0)
              << "state " << s << " k " << k << " set " << sets[s].str();
    }
  }
}
