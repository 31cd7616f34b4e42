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

#include "trc/snf.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trc {

enum class Rule : uint8_t {
  InitII,
  InitIN,
  StepNN,
  StepNX,
  StepXX,
  Aug1,
  Aug2,
  LoopInitX,
  LoopInitN,
  LoopInitC,
  LoopSub,
  LoopConc1,
  LoopConc2,
};
constexpr int kRuleCount = 13;
const char *rule_name(Rule r);

constexpr uint32_t kMainPartition = 0;

struct PartitionInfo {
  uint32_t search = 0;    // 1-based loop search counter; 0 for main
  uint32_t iteration = 0; // 1-based iteration within the search
  int64_t eventuality = -1;
  bool found = false;
};

constexpr int64_t kNoClause = -1;

struct ProofEvent {
  Rule rule;
  std::array<int64_t, 2> premises{kNoClause, kNoClause};
  uint32_t conclusion = 0;
  bool new_vertex = true;
};

struct ClauseEntry {
  SnfClause clause;
  uint32_t partition = kMainPartition;
  int64_t start_index = -1; // position in the starting clause list
};

struct ProofLog {
  std::vector<ClauseEntry> clauses;
  std::vector<ProofEvent> events;
  std::vector<PartitionInfo> partitions{PartitionInfo{}};
  int64_t empty_clause = kNoClause;
};

enum class Verdict : uint8_t { Sat, Unsat };

struct SolveOptions {
  size_t max_clauses = 1000000;
  double time_budget_s = 300.0;
  size_t max_loop_iterations = 100000;
  // Log derivations of an already present clause as edges into it.
  bool log_duplicates = false;
  // Resolution only uses literals of maximal rank within their part.
  // Unset means default_precedence when ordered, all literals otherwise.
  bool ordered = true;
  std::function<int(const Literal &)> precedence;
};

// Atoms < waits-for literals < proxies, earlier proxies ranking higher.
int default_precedence(const Literal &l);

struct SolveStats {
  size_t clauses = 0;
  size_t main_clauses = 0;
  size_t events = 0;
  size_t loop_searches = 0;
  size_t loop_iterations = 0;
  double seconds = 0;
};

struct SolveResult {
  Verdict verdict = Verdict::Sat;
  ProofLog log;
  SolveStats stats;
};

class ResourceLimit : public std::runtime_error {
public:
  enum class Kind { Clauses, Time, Iterations };
  ResourceLimit(Kind k, const std::string &msg)
      : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

SolveResult solve(const std::vector<SnfClause> &clauses,
                  const SolveOptions &opts = {});

// Checks that every logged conclusion instantiates its rule schema on its
// premises. Returns an empty string when the log is consistent.
std::string check_log(const ProofLog &log);

} // namespace trc
