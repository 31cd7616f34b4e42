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

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

enum Exit { kSat = 10, kUnsat = 20, kError = 1, kLimit = 2 };

struct Str {
  char *p = nullptr;
  ~Str() { trc_free(p); }
  std::string get() const { return p ? p : ""; }
};

using InputPtr = std::unique_ptr<trc_input, decltype(&trc_input_free)>;
using ReportPtr = std::unique_ptr<trc_report, decltype(&trc_report_free)>;

int error_exit(trc_status s) {
  std::cerr << "trc: " << trc_last_error() << "\n";
  return s == TRC_E_LIMIT ? kLimit : kError;
}

struct Common {
  std::string path;
  double budget = 300;
  uint64_t max_clauses = 0;
  bool unordered = false;
  bool log_duplicates = false;
};

void add_common(CLI::App *c, Common &o, bool with_path = true) {
  if (with_path)
    c->add_option("file", o.path, "input (.ltl, .snf or .ltlp)")->required();
  c->add_option("--budget", o.budget, "time budget per instance in seconds");
  c->add_option("--max-clauses", o.max_clauses, "clause cap");
  c->add_flag("--unordered", o.unordered, "resolve on every literal");
  c->add_flag("--log-duplicates", o.log_duplicates, "record edges into existing clauses");
}

trc_options options_of(const Common &c) {
  trc_options o;
  trc_options_init(&o);
  o.time_budget_s = c.budget;
  if (c.max_clauses)
    o.max_clauses = c.max_clauses;
  o.ordered = !c.unordered;
  o.log_duplicates = c.log_duplicates;
  return o;
}

int cmd_solve(const Common &c) {
  trc_input *in = nullptr;
  if (trc_status s = trc_input_load(c.path.c_str(), &in))
    return error_exit(s);
  InputPtr hold(in, trc_input_free);
  trc_options o = options_of(c);
  o.uc = 0;
  trc_report *r = nullptr;
  if (trc_status s = trc_solve(in, &o, &r))
    return error_exit(s);
  ReportPtr rh(r, trc_report_free);
  Str t;
  if (trc_status s = trc_report_text(r, &t.p))
    return error_exit(s);
  std::cout << t.get();
  return trc_report_verdict(r) == TRC_UNSAT ? kUnsat : kSat;
}

struct UcFlags {
  bool timepoints = false;
  std::string format = "text";
  std::string dot;
  bool dot_core = false;
  bool verify = false;
  uint64_t seed = 0;
  uint64_t words = 1000;
  std::string parikh = "scc";
  uint64_t lcm_cap = 0;
};

bool write_file(const std::string &path, const std::string &text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

int cmd_uc(const Common &c, const UcFlags &u) {
  trc_input *in = nullptr;
  if (trc_status s = trc_input_load(c.path.c_str(), &in))
    return error_exit(s);
  InputPtr hold(in, trc_input_free);
  trc_options o = options_of(c);
  o.timepoints = u.timepoints;
  o.parikh = u.parikh == "layered" ? TRC_PARIKH_LAYERED : TRC_PARIKH_SCC;
  if (u.lcm_cap)
    o.lcm_cap = u.lcm_cap;
  trc_report *r = nullptr;
  if (trc_status s = trc_solve(in, &o, &r))
    return error_exit(s);
  ReportPtr rh(r, trc_report_free);
  Str t;
  trc_status s = u.format == "json" ? trc_report_json(r, &t.p) : trc_report_text(r, &t.p);
  if (s)
    return error_exit(s);
  std::cout << t.get();
  if (trc_report_verdict(r) == TRC_SAT) {
    std::cerr << "trc: instance is satisfiable, no core\n";
    return kSat;
  }
  if (!u.dot.empty()) {
    Str d;
    if (trc_status s2 = trc_report_dot(r, u.dot_core, &d.p))
      return error_exit(s2);
    if (!write_file(u.dot, d.get())) {
      std::cerr << "trc: cannot write '" << u.dot << "'\n";
      return kError;
    }
  }
  if (u.verify) {
    int ok = 0;
    Str f;
    if (trc_status s2 = trc_report_verify(r, u.seed, u.words, &ok, &f.p))
      return error_exit(s2);
    std::cerr << "verify: " << (ok ? "pass" : "FAIL") << "\n" << f.get();
    if (!ok)
      return kError;
  }
  return kUnsat;
}

int cmd_eval(const std::string &path, const std::string &word) {
  trc_input *in = nullptr;
  if (trc_status s = trc_input_load(path.c_str(), &in))
    return error_exit(s);
  InputPtr hold(in, trc_input_free);
  int ltl = 0, ltlp = 0;
  if (trc_status s = trc_eval_input(in, word.c_str(), &ltl, &ltlp))
    return error_exit(s);
  std::cout << "ltl: " << (ltl ? "true" : "false") << "\n";
  if (ltlp >= 0)
    std::cout << "ltlp: " << (ltlp ? "true" : "false") << "\n";
  return 0;
}

struct BenchFlags {
  std::string dir;
  std::string profile;
  uint64_t seed = 0;
  uint64_t count = 50;
  std::string csv;
  bool no_timepoints = false;
  bool verify = false;
};

struct Row {
  std::string name, verdict, status = "ok";
  uint64_t clauses = 0, uc = 0, core_vertices = 0;
  double solve_s = 0, uc_s = 0, tp_s = 0, total_s = 0;
  std::vector<std::string> sets;
  std::string verified = "-";
};

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"')
      q += '"';
    q += ch;
  }
  return q + "\"";
}

Row bench_one(trc_input *in, const std::string &name, const Common &c, const BenchFlags &b) {
  Row row;
  row.name = name;
  trc_options o = options_of(c);
  o.timepoints = !b.no_timepoints;
  trc_report *r = nullptr;
  if (trc_status s = trc_solve(in, &o, &r)) {
    row.verdict = "-";
    row.status = s == TRC_E_LIMIT ? "limit" : "error";
    return row;
  }
  ReportPtr rh(r, trc_report_free);
  trc_stats st;
  trc_report_stats(r, &st);
  row.verdict = trc_report_verdict(r) == TRC_UNSAT ? "unsat" : "sat";
  row.clauses = st.clauses;
  row.uc = st.uc_clauses;
  row.core_vertices = st.core_vertices;
  row.solve_s = st.solve_s;
  row.uc_s = st.uc_s;
  row.tp_s = st.timepoints_s;
  row.total_s = st.total_s;
  if (!b.no_timepoints)
    for (size_t i = 0; i < trc_report_uc_size(r); ++i) {
      Str s;
      if (trc_report_uc_set(r, i, &s.p) == TRC_OK)
        row.sets.push_back(s.get());
    }
  if (b.verify && row.verdict == "unsat") {
    int ok = 0;
    Str f;
    if (trc_report_verify(r, b.seed, 1000, &ok, &f.p) == TRC_OK)
      row.verified = ok ? "pass" : "fail";
    else
      row.verified = "error";
  }
  return row;
}

int cmd_bench(const Common &c, const BenchFlags &b) {
  std::vector<Row> rows;
  if (!b.profile.empty()) {
    trc_batch *batch = nullptr;
    if (trc_status s = trc_generate(b.profile.c_str(), b.seed, b.count, &batch))
      return error_exit(s);
    for (size_t i = 0; i < trc_batch_size(batch); ++i) {
      trc_input *in = nullptr;
      if (trc_input_parse(trc_batch_text(batch, i), trc_batch_kind(batch, i),
                          trc_batch_name(batch, i), &in)) {
        Row row;
        row.name = trc_batch_name(batch, i);
        row.status = "parse";
        rows.push_back(row);
        continue;
      }
      rows.push_back(bench_one(in, trc_batch_name(batch, i), c, b));
      trc_input_free(in);
    }
    trc_batch_free(batch);
  } else {
    std::error_code ec;
    if (!fs::is_directory(b.dir, ec)) {
      std::cerr << "trc: '" << b.dir << "' is not a directory\n";
      return kError;
    }
    std::vector<fs::path> files;
    for (auto &e : fs::directory_iterator(b.dir)) {
      auto ext = e.path().extension();
      if (e.is_regular_file() && (ext == ".ltl" || ext == ".snf" || ext == ".ltlp"))
        files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (auto &p : files) {
      trc_input *in = nullptr;
      if (trc_input_load(p.string().c_str(), &in)) {
        Row row;
        row.name = p.filename().string();
        row.status = "parse";
        rows.push_back(row);
        continue;
      }
      rows.push_back(bench_one(in, p.filename().string(), c, b));
      trc_input_free(in);
    }
  }

  std::map<std::string, size_t> census;
  size_t unsat = 0, sat = 0, failed = 0, verified = 0;
  double total = 0;
  std::printf("%-40s %-6s %-6s %8s %5s %9s\n", "instance", "result", "status", "clauses",
              "uc", "time[s]");
  for (auto &r : rows) {
    std::printf("%-40s %-6s %-6s %8llu %5llu %9.4f\n", r.name.c_str(), r.verdict.c_str(),
                r.status.c_str(), static_cast<unsigned long long>(r.clauses),
                static_cast<unsigned long long>(r.uc), r.total_s);
    unsat += r.verdict == "unsat";
    sat += r.verdict == "sat";
    failed += r.status != "ok" || r.verified == "fail" || r.verified == "error";
    verified += r.verified == "pass";
    total += r.total_s;
    for (auto &s : r.sets)
      ++census[s];
  }
  std::printf("instances=%zu unsat=%zu sat=%zu failed=%zu verified=%zu time=%.4fs\n",
              rows.size(), unsat, sat, failed, verified, total);
  if (!census.empty()) {
    std::printf("time-point sets:");
    for (auto &[s, n] : census)
      std::printf(" %s:%zu", s.c_str(), n);
    std::printf("\n");
  }

  if (!b.csv.empty()) {
    std::ostringstream o;
    o << "instance,verdict,status,clauses,uc_clauses,core_vertices,solve_s,uc_s,"
         "timepoints_s,total_s,verified,sets\n";
    for (auto &r : rows) {
      std::string sets;
      for (size_t i = 0; i < r.sets.size(); ++i)
        sets += (i ? ";" : "") + r.sets[i];
      o << csv_field(r.name) << ',' << r.verdict << ',' << r.status << ',' << r.clauses << ','
        << r.uc << ',' << r.core_vertices << ',' << r.solve_s << ',' << r.uc_s << ','
        << r.tp_s << ',' << r.total_s << ',' << r.verified << ',' << csv_field(sets) << '\n';
    }
    if (!write_file(b.csv, o.str())) {
      std::cerr << "trc: cannot write '" << b.csv << "'\n";
      return kError;
    }
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"LTL satisfiability via temporal resolution, with unsatisfiable cores "
               "annotated by sets of time points"};
  app.require_subcommand(1);

  Common common;
  uint64_t seed = trc_default_seed();

  auto *solve = app.add_subcommand("solve", "decide satisfiability");
  add_common(solve, common);

  UcFlags uc;
  uc.seed = seed;
  auto *ucc = app.add_subcommand("uc", "extract an unsatisfiable core");
  add_common(ucc, common);
  ucc->add_flag("--timepoints", uc.timepoints, "annotate the core with sets of time points");
  ucc->add_option("--format", uc.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  ucc->add_option("--dot", uc.dot, "write the resolution graph in DOT");
  ucc->add_flag("--dot-core", uc.dot_core, "restrict the DOT graph to the core subgraph");
  ucc->add_flag("--verify", uc.verify, "check the core and its time points");
  ucc->add_option("--seed", uc.seed, "seed for sampled words");
  ucc->add_option("--words", uc.words, "number of sampled words");
  ucc->add_option("--parikh", uc.parikh, "Parikh image algorithm")
      ->check(CLI::IsMember({"scc", "layered"}));
  ucc->add_option("--lcm-cap", uc.lcm_cap, "cap on period lcm in set arithmetic");

  std::string eval_path, word;
  auto *eval = app.add_subcommand("eval", "evaluate a formula on a lasso word");
  eval->add_option("file", eval_path, "input (.ltl or .ltlp)")->required();
  eval->add_option("--word", word, "lasso word, e.g. \"{p}.{} ; {q}\"")->required();

  BenchFlags bench;
  bench.seed = seed;
  auto *bc = app.add_subcommand("bench", "run a directory or generated instances");
  add_common(bc, common, false);
  bc->add_option("dir", bench.dir, "directory of instances");
  bc->add_option("--generate", bench.profile,
                 "generator profile (random-clauses, unsat, counters)");
  bc->add_option("--seed", bench.seed, "generator and sampling seed");
  bc->add_option("--count", bench.count, "number of generated instances");
  bc->add_option("--csv", bench.csv, "write per-instance rows as CSV");
  bc->add_flag("--no-timepoints", bench.no_timepoints, "skip time-point labeling");
  bc->add_flag("--verify", bench.verify, "verify every unsat row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }

  if (*solve)
    return cmd_solve(common);
  if (*ucc)
    return cmd_uc(common, uc);
  if (*eval)
    return cmd_eval(eval_path, word);
  if (*bc) {
    if (bench.dir.empty() == bench.profile.empty()) {
      std::cerr << "trc: bench needs either a directory or --generate\n";
      return kError;
    }
    return cmd_bench(common, bench);
  }
  return kError;
}
