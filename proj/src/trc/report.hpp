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

#pragma once

#include "trc/engine.hpp"
#include "trc/oracle.hpp"
#include "trc/resgraph.hpp"
#include "trc/snf.hpp"
#include "trc/timepoints.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trc {

enum class InputKind { Ltl, Snf, Ltlp };

struct Input {
  InputKind kind = InputKind::Ltl;
  std::string name;
  Formula formula;            // Ltl, and the stripped formula for Ltlp
  AnnotatedFormula annotated; // Ltlp only
  std::vector<SnfClause> clauses;
  Translation translation; // Ltl only

  static Input from_text(std::string_view text, InputKind kind,
                         std::string name = {});
  static Input from_file(const std::string &path);
  static Input from_instance(const Instance &in);
  static Input from_formula(Formula f, std::string name = {});
  const std::vector<SnfClause> &snf() const;
};

InputKind kind_from_path(const std::string &path);

struct PipelineOptions {
  SolveOptions solve;
  bool uc = true;
  bool timepoints = true;
  ParikhAlgorithm parikh = ParikhAlgorithm::Scc;
};

struct PipelineStats {
  size_t input_clauses = 0;
  size_t clauses = 0;
  size_t events = 0;
  size_t loop_searches = 0;
  size_t loop_iterations = 0;
  size_t vertices = 0;
  size_t edges = 0;
  size_t core_vertices = 0;
  size_t core_edges = 0;
  size_t uc_clauses = 0;
  double solve_s = 0;
  double uc_s = 0;
  double timepoints_s = 0;
  double total_s = 0;
};

struct UcReport {
  Verdict verdict = Verdict::Sat;
  bool has_timepoints = false;
  std::vector<UcClause> uc; // sets are N when time points are off
  std::optional<Formula> ltl_core;
  std::optional<AnnotatedFormula> ltl_core_annotated;
  ResolutionGraph graph;
  Subgraph core;
  VertexLabels labels;
  PipelineStats stats;
};

UcReport run_pipeline(const Input &in, const PipelineOptions &opts = {});

struct VerifyOptions {
  uint64_t seed = 7;
  size_t words = 1000;
  SolveOptions solve;
};

struct VerifyResult {
  bool ok = true;
  size_t words_checked = 0;
  std::vector<std::string> failures;
};

// Re-solves the UC, checks the lemmas and the proof log, and samples lasso
// words that must all falsify the annotated cores.
VerifyResult verify_report(const Input &in, const UcReport &r,
                           const VerifyOptions &opts = {});

std::string report_text(const Input &in, const UcReport &r);
std::string report_json(const Input &in, const UcReport &r);
// Decodes a JSON report into typed values and encodes it again.
std::string json_roundtrip(const std::string &json);

const char *verdict_name(Verdict v);

} // namespace trc
