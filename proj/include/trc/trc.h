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

#ifndef TRC_TRC_H
#define TRC_TRC_H

#include <stddef.h>
#include <stdint.h>

#if defined(TRC_BUILDING)
#define TRC_API __attribute__((visibility("default")))
#else
#define TRC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct trc_input trc_input;
typedef struct trc_report trc_report;
typedef struct trc_batch trc_batch;

typedef enum trc_status {
  TRC_OK = 0,
  TRC_E_ARG = 1,
  TRC_E_IO = 2,
  TRC_E_PARSE = 3,
  TRC_E_LIMIT = 4,
  TRC_E_SET = 5,
  TRC_E_STATE = 6,
  TRC_E_INTERNAL = 7
} trc_status;

typedef enum trc_kind {
  TRC_KIND_LTL = 0,
  TRC_KIND_SNF = 1,
  TRC_KIND_LTLP = 2
} trc_kind;

typedef enum trc_verdict { TRC_SAT = 10, TRC_UNSAT = 20 } trc_verdict;

typedef enum trc_parikh { TRC_PARIKH_SCC = 0, TRC_PARIKH_LAYERED = 1 } trc_parikh;

typedef struct trc_options {
  uint64_t max_clauses;
  double time_budget_s;
  uint64_t max_loop_iterations;
  int log_duplicates;
  int ordered;
  int uc;
  int timepoints;
  int parikh;
  uint64_t lcm_cap;
} trc_options;

typedef struct trc_stats {
  uint64_t input_clauses;
  uint64_t clauses;
  uint64_t events;
  uint64_t loop_searches;
  uint64_t loop_iterations;
  uint64_t vertices;
  uint64_t edges;
  uint64_t core_vertices;
  uint64_t core_edges;
  uint64_t uc_clauses;
  double solve_s;
  double uc_s;
  double timepoints_s;
  double total_s;
} trc_stats;

/* Message of the last failed call on this thread; never NULL. */
TRC_API const char *trc_last_error(void);
/* Releases strings returned through char ** out-parameters. */
TRC_API void trc_free(char *s);

TRC_API void trc_options_init(trc_options *o);
TRC_API uint64_t trc_default_seed(void);

/* Kind from the .ltl, .snf or .ltlp extension. */
TRC_API trc_status trc_input_load(const char *path, trc_input **out);
TRC_API trc_status trc_input_parse(const char *text, trc_kind kind,
                                   const char *name, trc_input **out);
TRC_API void trc_input_free(trc_input *in);
TRC_API trc_kind trc_input_kind(const trc_input *in);
/* Clauses fed to the solver, one per line. */
TRC_API trc_status trc_input_snf(const trc_input *in, char **out);

TRC_API trc_status trc_solve(const trc_input *in, const trc_options *o,
                             trc_report **out);
TRC_API void trc_report_free(trc_report *r);
TRC_API trc_verdict trc_report_verdict(const trc_report *r);
TRC_API trc_status trc_report_stats(const trc_report *r, trc_stats *out);
TRC_API trc_status trc_report_text(const trc_report *r, char **out);
TRC_API trc_status trc_report_json(const trc_report *r, char **out);
/* core_only restricts the graph to the backward-reachable subgraph. */
TRC_API trc_status trc_report_dot(const trc_report *r, int core_only, char **out);
/* Number of UC clauses, and the time-point set of clause i. */
TRC_API size_t trc_report_uc_size(const trc_report *r);
TRC_API trc_status trc_report_uc_set(const trc_report *r, size_t i, char **out);
/* Sets *ok; failures receives one violation per line (may be empty). */
TRC_API trc_status trc_report_verify(const trc_report *r, uint64_t seed,
                                     uint64_t words, int *ok, char **failures);

/* Evaluates formula text of the given kind (LTL or LTLp) on a lasso word
   "{p,q}.{} ; {p}". */
TRC_API trc_status trc_eval(const char *formula, trc_kind kind,
                            const char *word, int *result);

/* Evaluates an LTL or LTLp input on a word. ltlp is set to -1 for plain LTL
   input; ltl is the verdict of the formula with annotations stripped. */
TRC_API trc_status trc_eval_input(const trc_input *in, const char *word, int *ltl,
                                  int *ltlp);

/* Profiles: "random-clauses", "unsat", "counters". */
TRC_API trc_status trc_generate(const char *profile, uint64_t seed,
                                size_t count, trc_batch **out);
TRC_API size_t trc_batch_size(const trc_batch *b);
TRC_API const char *trc_batch_name(const trc_batch *b, size_t i);
TRC_API const char *trc_batch_text(const trc_batch *b, size_t i);
TRC_API trc_kind trc_batch_kind(const trc_batch *b, size_t i);
TRC_API void trc_batch_free(trc_batch *b);

#ifdef __cplusplus
}
#endif

#endif
