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

#include "trc/report.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>

struct trc_input {
  trc::Input in;
};

struct trc_report {
  trc::Input in;
  trc::UcReport r;
  trc::SolveOptions solve;
};

struct trc_batch {
  std::vector<trc::Instance> items;
  std::vector<std::string> texts;
};

namespace {

thread_local std::string last_error;

trc_status fail(trc_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

char *dup(const std::string &s) {
  char *p = static_cast<char *>(std::malloc(s.size() + 1));
  if (p)
    std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F> trc_status guard(F &&f) {
  try {
    last_error.clear();
    return f();
  } catch (const trc::ParseError &e) {
    return fail(TRC_E_PARSE, e.what());
  } catch (const trc::SnfParseError &e) {
    return fail(TRC_E_PARSE, e.what());
  } catch (const trc::ResourceLimit &e) {
    return fail(TRC_E_LIMIT, e.what());
  } catch (const trc::SemilinearError &e) {
    return fail(TRC_E_SET, e.what());
  } catch (const std::ios_base::failure &e) {
    return fail(TRC_E_IO, e.what());
  } catch (const std::invalid_argument &e) {
    return fail(TRC_E_ARG, e.what());
  } catch (const std::exception &e) {
    return fail(TRC_E_INTERNAL, e.what());
  } catch (...) {
    return fail(TRC_E_INTERNAL, "unknown error");
  }
}

trc_kind to_c(trc::InputKind k) {
  switch (k) {
  case trc::InputKind::Ltl: return TRC_KIND_LTL;
  case trc::InputKind::Snf: return TRC_KIND_SNF;
  case trc::InputKind::Ltlp: return TRC_KIND_LTLP;
  }
  return TRC_KIND_LTL;
}

trc::InputKind from_c(trc_kind k) {
  switch (k) {
  case TRC_KIND_LTL: return trc::InputKind::Ltl;
  case TRC_KIND_SNF: return trc::InputKind::Snf;
  case TRC_KIND_LTLP: return trc::InputKind::Ltlp;
  }
  throw std::invalid_argument("unknown input kind");
}

} // namespace

extern "C" {

const char *trc_last_error(void) { return last_error.c_str(); }

void trc_free(char *s) { std::free(s); }

void trc_options_init(trc_options *o) {
  if (!o)
    return;
  trc::SolveOptions d;
  o->max_clauses = d.max_clauses;
  o->time_budget_s = d.time_budget_s;
  o->max_loop_iterations = d.max_loop_iterations;
  o->log_duplicates = d.log_duplicates;
  o->ordered = d.ordered;
  o->uc = 1;
  o->timepoints = 1;
  o->parikh = TRC_PARIKH_SCC;
  o->lcm_cap = trc::SemilinearSet::lcm_cap();
}

uint64_t trc_default_seed(void) { return trc::default_seed(); }

trc_status trc_input_load(const char *path, trc_input **out) {
  if (!path || !out)
    return fail(TRC_E_ARG, "null argument");
  return guard([&] {
    *out = new trc_input{trc::Input::from_file(path)};
    return TRC_OK;
  });
}

trc_status trc_input_parse(const char *text, trc_kind kind, const char *name,
                           trc_input **out) {
  if (!text || !out)
    return fail(TRC_E_ARG, "null argument");
  return guard([&] {
    *out = new trc_input{trc::Input::from_text(text, from_c(kind), name ? name : "")};
    return TRC_OK;
  });
}

void trc_input_free(trc_input *in) { delete in; }

trc_kind trc_input_kind(const trc_input *in) { return in ? to_c(in->in.kind) : TRC_KIND_LTL; }

trc_status trc_input_snf(const trc_input *in, char **out) {
  if (!in || !out)
    return fail(TRC_E_ARG, "null argument");
  return guard([&] {
    *out = dup(trc::print_snf(in->in.snf()));
    return TRC_OK;
  });
}

trc_status trc_solve(const trc_input *in, const trc_options *o, trc_report **out) {
  if (!in || !out)
    return fail(TRC_E_ARG, "null argument");
  trc_options def;
  trc_options_init(&def);
  if (!o)
    o = &def;
  return guard([&] {
    trc::PipelineOptions po;
    po.solve.max_clauses = o->max_clauses;
    po.solve.time_budget_s = o->time_budget_s;
    po.solve.max_loop_iterations = o->max_loop_iterations;
    po.solve.log_duplicates = o->log_duplicates != 0;
    po.solve.ordered = o->ordered != 0;
    po.uc = o->uc != 0;
    po.timepoints = o->uc != 0 && o->timepoints != 0;
    po.parikh = o->parikh == TRC_PARIKH_LAYERED ? trc::ParikhAlgorithm::Layered
                                                : trc::ParikhAlgorithm::Scc;
    if (o->lcm_cap)
      trc::SemilinearSet::set_lcm_cap(o->lcm_cap);
    auto *rep = new trc_report{in->in, {}, po.solve};
    try {
      rep->r = trc::run_pipeline(rep->in, po);
    } catch (...) {
      delete rep;
      throw;
    }
    *out = rep;
    return TRC_OK;
  });
}

void trc_report_free(trc_report *r) { delete r; }

trc_verdict trc_report_verdict(const trc_report *r) {
  return r && r->r.verdict == trc::Verdict::Unsat ? TRC_UNSAT : TRC_SAT;
}

trc_status trc_report_stats(const trc_report *r, trc_stats *out) {
  if (!r || !out)
    return fail(TRC_E_ARG, "null argument");
  const auto &s = r->r.stats;
  *out = {s.input_clauses, s.clauses,     s.events,        s.loop_searches,
          s.loop_iterations, s.vertices,  s.edges,         s.core_vertices,
          s.core_edges,    s.uc_clauses,  s.solve_s,       s.uc_s,
          s.timepoints_s,  s.total_s};
  return TRC_OK;
}

trc_status trc_report_text(const trc_report *r, char **out) {
  if (!r || !out)
    return fail(TRC_E_ARG, "null argument");
  return guard([&] {
    *out = dup(trc::report_text(r->in, r->r));
    return TRC_OK;
  });
}

trc_status trc_report_json(const trc_report *r, char **out) {
  if (!r || !out)
    return fail(TRC_E_ARG, "null argument");
  return guard([&] {
    *out = dup(trc::report_json(r->in, r->r));
    return TRC_OK;
  });
}

trc_status trc_report_dot(const trc_report *r, int core_only, char **out) {
  if (!r || !out)
    return fail(TRC_E_ARG, "null argument");
  if (r->r.verdict != trc::Verdict::Unsat || r->r.graph.vertices.empty())
    return fail(TRC_E_STATE, "no resolution graph (instance is sat or UC extraction was off)");
  return guard([&] {
    *out = dup(trc::to_dot(r->r.graph, core_only ? &r->r.core : nullptr));
    return TRC_OK;
  });
}

size_t trc_report_uc_size(const trc_report *r) { return r ? r->r.uc.size() : 0; }

trc_status trc_report_uc_set(const trc_report *r, size_t i, char **out) {
  if (!r || !out)
    return fail(TRC_E_ARG, "null argument");
  if (i >= r->r.uc.size())
    return fail(TRC_E_ARG, "UC index out of range");
  if (!r->r.has_timepoints)
    return fail(TRC_E_STATE, "report has no time points");
  return guard([&] {
    *out = dup(r->r.uc[i].set.str());
    return TRC_OK;
  });
}

trc_status trc_report_verify(const trc_report *r, uint64_t seed, uint64_t words, int *ok,
                             char **failures) {
  if (!r || !ok)
    return fail(TRC_E_ARG, "null argument");
  return guard([&] {
    trc::VerifyOptions vo;
    vo.seed = seed;
    vo.words = words;
    vo.solve = r->solve;
    trc::VerifyResult v = trc::verify_report(r->in, r->r, vo);
    *ok = v.ok;
    if (failures) {
      std::string s;
      for (auto &f : v.failures)
        s += f + "\n";
      *failures = dup(s);
    }
    return TRC_OK;
  });
}

trc_status trc_eval(const char *formula, trc_kind kind, const char *word, int *result) {
  if (!formula || !word || !result)
    return fail(TRC_E_ARG, "null argument");
  return guard([&] {
    trc::LassoWord w = trc::LassoWord::parse(word);
    if (kind == TRC_KIND_LTL)
      *result = trc::eval_ltl(w, trc::parse_ltl(formula));
    else if (kind == TRC_KIND_LTLP)
      *result = trc::eval_ltlp(w, trc::parse_ltlp(formula));
    else
      return fail(TRC_E_ARG, "evaluation needs an LTL or LTLp formula");
    return TRC_OK;
  });
}

trc_status trc_eval_input(const trc_input *in, const char *word, int *ltl, int *ltlp) {
  if (!in || !word || !ltl || !ltlp)
    return fail(TRC_E_ARG, "null argument");
  if (in->in.kind == trc::InputKind::Snf)
    return fail(TRC_E_ARG, "evaluation needs an LTL or LTLp formula");
  return guard([&] {
    trc::LassoWord w = trc::LassoWord::parse(word);
    *ltl = trc::eval_ltl(w, in->in.formula);
    *ltlp = in->in.kind == trc::InputKind::Ltlp ? trc::eval_ltlp(w, in->in.annotated) : -1;
    return TRC_OK;
  });
}

trc_status trc_generate(const char *profile, uint64_t seed, size_t count, trc_batch **out) {
  if (!profile || !out)
    return fail(TRC_E_ARG, "null argument");
  return guard([&] {
    auto *b = new trc_batch;
    b->items = trc::sample_instances(seed, count, trc::parse_profile(profile));
    for (auto &x : b->items)
      b->texts.push_back(x.text());
    *out = b;
    return TRC_OK;
  });
}

size_t trc_batch_size(const trc_batch *b) { return b ? b->items.size() : 0; }

const char *trc_batch_name(const trc_batch *b, size_t i) {
  return b && i < b->items.size() ? b->items[i].name.c_str() : nullptr;
}

const char *trc_batch_text(const trc_batch *b, size_t i) {
  return b && i < b->texts.size() ? b->texts[i].c_str() : nullptr;
}

trc_kind trc_batch_kind(const trc_batch *b, size_t i) {
  return b && i < b->items.size() && !b->items[i].is_ltl ? TRC_KIND_SNF : TRC_KIND_LTL;
}

void trc_batch_free(trc_batch *b) { delete b; }

} // extern "C"
