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

#include "trc/trc.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string corpus(const char *f) { return std::string(TRC_CORPUS_DIR) + "/" + f; }

struct Str {
  char *p = nullptr;
  ~Str() { trc_free(p); }
  std::string get() const { return p ? p : ""; }
};

int cli(const std::string &args, std::string *out = nullptr) {
  std::string cmd = std::string(TRC_CLI) + " " + args + " 2>/dev/null";
  FILE *f = popen(cmd.c_str(), "r");
  if (!f)
    return -1;
  std::string text;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0)
    text.append(buf, n);
  int st = pclose(f);
  if (out)
    *out = text;
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

} // namespace

TEST(CApi, SolveAndReport) {
  trc_input *in = nullptr;
  ASSERT_EQ(trc_input_load(corpus("alternating.snf").c_str(), &in), TRC_OK);
  EXPECT_EQ(trc_input_kind(in), TRC_KIND_SNF);
  trc_options o;
  trc_options_init(&o);
  trc_report *r = nullptr;
  ASSERT_EQ(trc_solve(in, &o, &r), TRC_OK);
  EXPECT_EQ(trc_report_verdict(r), TRC_UNSAT);
  ASSERT_EQ(trc_report_uc_size(r), 6u);
  Str s;
  ASSERT_EQ(trc_report_uc_set(r, 1, &s.p), TRC_OK);
  EXPECT_EQ(s.get(), "2N");
  trc_stats st;
  ASSERT_EQ(trc_report_stats(r, &st), TRC_OK);
  EXPECT_EQ(st.input_clauses, 6u);
  EXPECT_EQ(st.uc_clauses, 6u);
  EXPECT_GT(st.core_vertices, 0u);
  int ok = 0;
  Str fails;
  ASSERT_EQ(trc_report_verify(r, 7, 200, &ok, &fails.p), TRC_OK);
  EXPECT_TRUE(ok) << fails.get();
  Str dot;
  ASSERT_EQ(trc_report_dot(r, 1, &dot.p), TRC_OK);
  EXPECT_NE(dot.get().find("digraph"), std::string::npos);
  EXPECT_EQ(trc_report_uc_set(r, 99, &s.p), TRC_E_ARG);
  trc_report_free(r);
  trc_input_free(in);
}

TEST(CApi, Errors) {
  trc_input *in = nullptr;
  EXPECT_EQ(trc_input_parse("p &", TRC_KIND_LTL, "bad", &in), TRC_E_PARSE);
  EXPECT_NE(std::string(trc_last_error()), "");
  EXPECT_EQ(trc_input_load("/nonexistent/x.ltl", &in), TRC_E_IO);
  EXPECT_EQ(trc_input_load("x.txt", &in), TRC_E_ARG);
  EXPECT_EQ(trc_input_load(nullptr, &in), TRC_E_ARG);
  ASSERT_EQ(trc_input_parse("G(F c)", TRC_KIND_LTL, nullptr, &in), TRC_OK);
  trc_report *r = nullptr;
  ASSERT_EQ(trc_solve(in, nullptr, &r), TRC_OK);
  EXPECT_EQ(trc_report_verdict(r), TRC_SAT);
  Str d;
  EXPECT_EQ(trc_report_dot(r, 0, &d.p), TRC_E_STATE);
  trc_report_free(r);
  trc_options o;
  trc_options_init(&o);
  o.max_clauses = 3;
  EXPECT_EQ(trc_solve(in, &o, &r), TRC_E_LIMIT);
  trc_input_free(in);
}

TEST(CApi, Eval) {
  int v = -1;
  ASSERT_EQ(trc_eval("G p", TRC_KIND_LTL, "; {p}", &v), TRC_OK);
  EXPECT_EQ(v, 1);
  ASSERT_EQ(trc_eval("G[2N] p", TRC_KIND_LTLP, "{p}.{} ; {p}.{}", &v), TRC_OK);
  EXPECT_EQ(v, 1);
  EXPECT_EQ(trc_eval("G p", TRC_KIND_LTL, "{p", &v), TRC_E_ARG);
  trc_input *in = nullptr;
  ASSERT_EQ(trc_input_load(corpus("g_and_x_not_core.ltlp").c_str(), &in), TRC_OK);
  int a = -1, b = -1;
  ASSERT_EQ(trc_eval_input(in, "{p} ; {p}", &a, &b), TRC_OK);
  EXPECT_EQ(a, 0);
  EXPECT_EQ(b, 0);
  trc_input_free(in);
}

TEST(CApi, Generate) {
  trc_batch *b = nullptr;
  ASSERT_EQ(trc_generate("counters", 7, 3, &b), TRC_OK);
  ASSERT_EQ(trc_batch_size(b), 3u);
  EXPECT_EQ(trc_batch_kind(b, 0), TRC_KIND_SNF);
  trc_input *in = nullptr;
  ASSERT_EQ(trc_input_parse(trc_batch_text(b, 0), trc_batch_kind(b, 0), trc_batch_name(b, 0), &in),
            TRC_OK);
  trc_input_free(in);
  trc_batch_free(b);
  EXPECT_EQ(trc_generate("nope", 7, 3, &b), TRC_E_ARG);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("solve " + corpus("g_and_x_not.ltl")), 20);
  EXPECT_EQ(cli("solve " + corpus("eventually_c.ltl")), 10);
  EXPECT_EQ(cli("solve " + corpus("alternating.snf")), 20);
  EXPECT_EQ(cli("solve /nonexistent.ltl"), 1);
  EXPECT_EQ(cli("solve --max-clauses 3 " + corpus("alternating.snf")), 2);
  EXPECT_EQ(cli("uc " + corpus("eventually_c.ltl")), 10);
  EXPECT_EQ(cli("bogus"), 1);
}

TEST(Cli, UcRendering) {
  std::string out;
  EXPECT_EQ(cli("uc --timepoints --verify " + corpus("g_and_x_not.ltl"), &out), 20);
  EXPECT_NE(out.find("uc (ltl): (G[{1}] p) &[{0},{0}] (X[{1}] ~[{1}] p)"), std::string::npos);
  EXPECT_EQ(cli("uc --timepoints " + corpus("alternating.snf"), &out), 20);
  EXPECT_NE(out.find("G[2N+1](~[2N+1]c | X[2N+2] ~[2N+2]a)"), std::string::npos);
  EXPECT_NE(out.find("G[{0}](F[N] c)"), std::string::npos);
  EXPECT_EQ(cli("uc --timepoints --format json " + corpus("alternating.snf"), &out), 20);
  EXPECT_EQ(out.front(), '{');
}

TEST(Cli, DotAndEval) {
  auto dot = std::filesystem::temp_directory_path() / "trc_test.dot";
  EXPECT_EQ(cli("uc --dot " + dot.string() + " " + corpus("alternating.snf")), 20);
  std::ifstream f(dot);
  std::string first;
  std::getline(f, first);
  EXPECT_EQ(first, "digraph resolution {");
  std::filesystem::remove(dot);
  std::string out;
  EXPECT_EQ(cli("eval --word '; {p}' " + corpus("g_and_x_not_core.ltlp"), &out), 0);
  EXPECT_EQ(out, "ltl: false\nltlp: false\n");
}

TEST(Cli, Bench) {
  auto dir = std::filesystem::temp_directory_path() / "trc_empty_bench";
  std::filesystem::create_directories(dir);
  std::string out;
  EXPECT_EQ(cli("bench " + dir.string(), &out), 0);
  EXPECT_NE(out.find("instances=0"), std::string::npos);
  std::filesystem::remove_all(dir);
  auto csv = std::filesystem::temp_directory_path() / "trc_bench.csv";
  EXPECT_EQ(cli("bench --generate unsat --seed 7 --count 50 --verify --csv " + csv.string(), &out),
            0);
  EXPECT_NE(out.find("instances=50 unsat=50 sat=0 failed=0 verified=50"), std::string::npos)
      << out;
  std::ifstream f(csv);
  size_t lines = 0;
  for (std::string l; std::getline(f, l);)
    ++lines;
  EXPECT_EQ(lines, 51u);
  std::filesystem::remove(csv);
  EXPECT_EQ(cli("bench --verify " + std::string(TRC_CORPUS_DIR), &out), 0);
  EXPECT_NE(out.find("failed=0"), std::string::npos) << out;
}
