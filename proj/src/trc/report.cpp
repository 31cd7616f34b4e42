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

#include "trc/report.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

namespace trc {

using json = nlohmann::json;

const char *verdict_name(Verdict v) { return v == Verdict::Sat ? "sat" : "unsat"; }

InputKind kind_from_path(const std::string &path) {
  auto ends = [&](const char *s) {
    std::string x(s);
    return path.size() >= x.size() && path.compare(path.size() - x.size(), x.size(), x) == 0;
  };
  if (ends(".snf"))
    return InputKind::Snf;
  if (ends(".ltlp"))
    return InputKind::Ltlp;
  if (ends(".ltl"))
    return InputKind::Ltl;
  throw std::invalid_argument("unknown input extension for '" + path +
                              "' (expected .ltl, .snf or .ltlp)");
}

Input Input::from_text(std::string_view text, InputKind kind, std::string name) {
  Input in;
  in.kind = kind;
  in.name = std::move(name);
  switch (kind) {
  case InputKind::Ltl:
    in.formula = parse_ltl(text);
    in.translation = translate(in.formula);
    break;
  case InputKind::Ltlp:
    in.annotated = parse_ltlp(text);
    in.formula = in.annotated.strip();
    in.translation = translate(in.formula);
    break;
  case InputKind::Snf:
    in.clauses = parse_snf(text);
    break;
  }
  return in;
}

Input Input::from_file(const std::string &path) {
  InputKind k = kind_from_path(path);
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw std::ios_base::failure("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return from_text(ss.str(), k, path);
}

Input Input::from_formula(Formula f, std::string name) {
  Input in;
  in.kind = InputKind::Ltl;
  in.name = std::move(name);
  in.formula = std::move(f);
  in.translation = translate(in.formula);
  return in;
}

Input Input::from_instance(const Instance &x) {
  if (x.is_ltl)
    return from_formula(x.formula, x.name);
  Input in;
  in.kind = InputKind::Snf;
  in.name = x.name;
  in.clauses = x.clauses;
  return in;
}

const std::vector<SnfClause> &Input::snf() const {
  return kind == InputKind::Snf ? clauses : translation.clauses;
}

namespace {
double since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}
} // namespace

UcReport run_pipeline(const Input &in, const PipelineOptions &opts) {
  auto t0 = std::chrono::steady_clock::now();
  UcReport r;
  const auto &C = in.snf();
  SolveResult sr = solve(C, opts.solve);
  r.verdict = sr.verdict;
  r.stats.input_clauses = C.size();
  r.stats.clauses = sr.stats.clauses;
  r.stats.events = sr.stats.events;
  r.stats.loop_searches = sr.stats.loop_searches;
  r.stats.loop_iterations = sr.stats.loop_iterations;
  r.stats.solve_s = sr.stats.seconds;
  if (r.verdict == Verdict::Sat || !opts.uc) {
    r.stats.total_s = since(t0);
    return r;
  }

  auto t1 = std::chrono::steady_clock::now();
  r.graph = build_graph(sr.log, C.size());
  r.core = backward_subgraph(r.graph);
  std::vector<size_t> idx = uc_snf(r.graph, r.core);
  r.stats.vertices = r.graph.vertices.size();
  r.stats.edges = r.graph.edges.size();
  r.stats.core_vertices = r.core.vertices.size();
  r.stats.core_edges = r.core.edges.size();
  r.stats.uc_clauses = idx.size();
  if (in.kind != InputKind::Snf)
    r.ltl_core = map_uc_to_ltl(idx, in.translation.occ, in.formula);
  r.stats.uc_s = since(t1);

  if (opts.timepoints) {
    auto t2 = std::chrono::steady_clock::now();
    r.labels = label_vertices(r.core, opts.parikh);
    r.uc = uc_with_timepoints(r.graph, r.core, r.labels);
    r.has_timepoints = true;
    if (r.ltl_core) {
      std::vector<AnnotatedClauseRef> refs;
      for (auto &u : r.uc)
        refs.push_back({u.index, u.set});
      r.ltl_core_annotated =
          annotate_ltl_uc(refs, in.translation.occ, in.formula, *r.ltl_core);
    }
    r.stats.timepoints_s = since(t2);
  } else {
    for (size_t i : idx)
      r.uc.push_back({i, C[i], SemilinearSet::naturals()});
  }
  r.stats.total_s = since(t0);
  return r;
}

VerifyResult verify_report(const Input &in, const UcReport &r,
                           const VerifyOptions &opts) {
  VerifyResult v;
  auto fail = [&](std::string m) {
    v.ok = false;
    v.failures.push_back(std::move(m));
  };
  Rng rng(opts.seed);

  if (r.verdict == Verdict::Sat) {
    return v;
  }
  std::vector<SnfClause> ucs;
  for (auto &u : r.uc)
    ucs.push_back(u.clause);
  try {
    if (solve(ucs, opts.solve).verdict != Verdict::Unsat)
      fail("re-solving the SNF core returned sat");
  } catch (const ResourceLimit &e) {
    fail(std::string("re-solving the SNF core hit a resource cap: ") + e.what());
  }
  if (!r.has_timepoints)
    return v;
  for (auto &s : check_lemmas(r.graph, r.core, r.labels))
    fail("lemma: " + s);
  for (auto &u : r.uc)
    if (u.set.is_empty())
      fail("empty time-point set for clause " + u.clause.str());

  AnnotatedFormula theta = conjoin(r.uc);
  std::vector<std::string> props = props_of(theta);
  for (size_t k = 0; k < opts.words; ++k) {
    LassoWord w = sample_word(rng, props);
    try {
      if (eval_ltlp(w, theta)) {
        fail("annotated SNF core satisfied by " + w.str());
        break;
      }
      if (r.ltl_core_annotated && eval_ltlp(w, *r.ltl_core_annotated)) {
        fail("annotated LTL core satisfied by " + w.str());
        break;
      }
      if (r.ltl_core && eval_ltl(w, *r.ltl_core)) {
        fail("LTL core satisfied by " + w.str());
        break;
      }
      if (in.kind != InputKind::Snf && eval_ltl(w, in.formula)) {
        fail("input satisfied by " + w.str());
        break;
      }
    } catch (const SemilinearError &e) {
      fail(std::string("word evaluation skipped: ") + e.what());
      break;
    }
    ++v.words_checked;
  }
  return v;
}

namespace {

std::string pad(std::string s, size_t n) {
  if (s.size() < n)
    s.append(n - s.size(), ' ');
  return s;
}

} // namespace

std::string report_text(const Input &in, const UcReport &r) {
  std::ostringstream o;
  o << (r.verdict == Verdict::Sat ? "SAT" : "UNSAT") << "\n";
  if (r.verdict == Verdict::Unsat) {
    o << "uc (snf, " << r.uc.size() << " of " << r.stats.input_clauses
      << " clauses):\n";
    for (auto &u : r.uc) {
      o << "  ";
      if (r.has_timepoints)
        o << pad(render_clause(u.clause, u.set), 44) << "  @ " << u.set.str();
      else
        o << u.clause.str();
      o << "\n";
    }
    if (r.ltl_core_annotated)
      o << "uc (ltl): " << print_ltlp(*r.ltl_core_annotated) << "\n";
    else if (r.ltl_core)
      o << "uc (ltl): " << print_ltl(*r.ltl_core) << "\n";
  }
  const auto &s = r.stats;
  o << "stats: clauses=" << s.clauses << " events=" << s.events
    << " loop_searches=" << s.loop_searches << " loop_iterations=" << s.loop_iterations;
  if (r.verdict == Verdict::Unsat)
    o << " |V|=" << s.vertices << " |V'|=" << s.core_vertices;
  o << " time=" << s.total_s << "s\n";
  (void)in;
  return o.str();
}

namespace {

const char *op_name(Op op) {
  switch (op) {
  case Op::True: return "true";
  case Op::False: return "false";
  case Op::Prop: return "prop";
  case Op::Not: return "not";
  case Op::And: return "and";
  case Op::Or: return "or";
  case Op::Implies: return "implies";
  case Op::Next: return "next";
  case Op::Until: return "until";
  case Op::Release: return "release";
  case Op::Finally: return "finally";
  case Op::Globally: return "globally";
  }
  return "?";
}

Op op_from(const std::string &s) {
  static const Op all[] = {Op::True, Op::False, Op::Prop, Op::Not,
                           Op::And, Op::Or, Op::Implies, Op::Next,
                           Op::Until, Op::Release, Op::Finally, Op::Globally};
  for (Op o : all)
    if (s == op_name(o))
      return o;
  throw std::invalid_argument("unknown op '" + s + "'");
}

json lits_json(const std::vector<Literal> &v) {
  json a = json::array();
  for (auto &l : v)
    a.push_back(l.str());
  return a;
}

Literal lit_from(const std::string &s) {
  return s.size() > 1 && s[0] == '~' ? Literal{s.substr(1), false} : Literal{s, true};
}

std::vector<Literal> lits_from(const json &a) {
  std::vector<Literal> v;
  for (auto &x : a)
    v.push_back(lit_from(x.get<std::string>()));
  return v;
}

json node_json(const AnnotatedFormula &a, OccId &path, bool with_sets) {
  json n;
  n["op"] = op_name(a.op);
  n["occ"] = occ_str(path);
  if (a.op == Op::Prop)
    n["name"] = a.name;
  if (!a.kids.empty()) {
    json kids = json::array();
    for (uint32_t i = 0; i < a.kids.size(); ++i) {
      path.push_back(i);
      kids.push_back(node_json(a.kids[i], path, with_sets));
      path.pop_back();
    }
    n["kids"] = kids;
    if (with_sets) {
      json sets = json::array();
      for (auto &s : a.sets)
        sets.push_back(s.str());
      n["sets"] = sets;
    }
  }
  return n;
}

AnnotatedFormula node_from(const json &n) {
  AnnotatedFormula a;
  a.op = op_from(n.at("op").get<std::string>());
  if (a.op == Op::Prop)
    a.name = n.at("name").get<std::string>();
  if (n.contains("kids"))
    for (auto &k : n.at("kids"))
      a.kids.push_back(node_from(k));
  if (n.contains("sets"))
    for (auto &s : n.at("sets"))
      a.sets.push_back(SemilinearSet::parse(s.get<std::string>()));
  return a;
}

AnnotatedFormula lift(const Formula &f) {
  AnnotatedFormula a{f.op, f.name, {}, {}};
  for (auto &k : f.kids)
    a.kids.push_back(lift(k));
  return a;
}

json clause_json(size_t index, const SnfClause &c, const SemilinearSet *set) {
  json j;
  j["index"] = index;
  j["kind"] = kind_name(c.kind);
  j["now"] = lits_json(c.now);
  j["next"] = lits_json(c.next);
  if (c.ev)
    j["ev"] = c.ev->str();
  if (set)
    j["timepoints"] = set->str();
  return j;
}

json encode(const std::string &status, const std::vector<json> &clauses,
            const std::optional<AnnotatedFormula> &core, bool core_sets,
            const json &stats) {
  json j;
  j["status"] = status;
  j["uc_snf"] = clauses;
  if (core) {
    OccId p;
    j["uc_ltl"] = node_json(*core, p, core_sets);
    j["uc_ltl_text"] = core_sets ? print_ltlp(*core) : print_ltl(core->strip());
  } else {
    j["uc_ltl"] = nullptr;
  }
  j["stats"] = stats;
  return j;
}

} // namespace

std::string report_json(const Input &in, const UcReport &r) {
  (void)in;
  std::vector<json> cl;
  for (auto &u : r.uc)
    cl.push_back(clause_json(u.index, u.clause, r.has_timepoints ? &u.set : nullptr));
  std::optional<AnnotatedFormula> core;
  bool sets = false;
  if (r.ltl_core_annotated) {
    core = r.ltl_core_annotated;
    sets = true;
  } else if (r.ltl_core) {
    core = lift(*r.ltl_core);
  }
  const auto &s = r.stats;
  json st;
  st["input_clauses"] = s.input_clauses;
  st["clauses"] = s.clauses;
  st["events"] = s.events;
  st["loop_searches"] = s.loop_searches;
  st["loop_iterations"] = s.loop_iterations;
  st["vertices"] = s.vertices;
  st["edges"] = s.edges;
  st["core_vertices"] = s.core_vertices;
  st["core_edges"] = s.core_edges;
  st["uc_clauses"] = s.uc_clauses;
  st["solve_s"] = s.solve_s;
  st["uc_s"] = s.uc_s;
  st["timepoints_s"] = s.timepoints_s;
  st["total_s"] = s.total_s;
  return encode(verdict_name(r.verdict), cl, core, sets, st).dump(2) + "\n";
}

std::string json_roundtrip(const std::string &text) {
  json j = json::parse(text);
  std::vector<json> cl;
  for (auto &c : j.at("uc_snf")) {
    SnfClause s;
    std::string k = c.at("kind").get<std::string>();
    s.kind = k == "initial" ? ClauseKind::Initial
             : k == "global" ? ClauseKind::Global
                             : ClauseKind::Eventuality;
    s.now = lits_from(c.at("now"));
    s.next = lits_from(c.at("next"));
    if (c.contains("ev"))
      s.ev = lit_from(c.at("ev").get<std::string>());
    s.normalize();
    std::optional<SemilinearSet> set;
    if (c.contains("timepoints"))
      set = SemilinearSet::parse(c.at("timepoints").get<std::string>());
    cl.push_back(clause_json(c.at("index").get<size_t>(), s, set ? &*set : nullptr));
  }
  std::optional<AnnotatedFormula> core;
  bool sets = false;
  if (!j.at("uc_ltl").is_null()) {
    core = node_from(j.at("uc_ltl"));
    sets = j.at("uc_ltl").contains("sets");
  }
  return encode(j.at("status").get<std::string>(), cl, core, sets, j.at("stats"))
             .dump(2) +
         "\n";
}

} // namespace trc
