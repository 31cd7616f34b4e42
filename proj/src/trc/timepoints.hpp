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

#include "trc/ltl.hpp"
#include "trc/resgraph.hpp"
#include "trc/semilinear.hpp"

#include <map>
#include <string>
#include <vector>

namespace trc {

struct UnaryNfa {
  uint32_t states = 0;
  std::vector<uint32_t> initial;
  std::vector<std::pair<uint32_t, uint32_t>> ones;
  std::vector<std::pair<uint32_t, uint32_t>> eps;

  bool epsilon_free() const { return eps.empty(); }
};

// States are numbered in the order of sub.vertices; the initial state is v□.
UnaryNfa to_unary_nfa(const Subgraph &sub);
UnaryNfa epsilon_free(const UnaryNfa &n);

enum class ParikhAlgorithm { Scc, Layered };

// Per-state Parikh images of the letter 1; the NFA must be ε-free.
std::vector<SemilinearSet> parikh_all_states(
    const UnaryNfa &n, ParikhAlgorithm algo = ParikhAlgorithm::Scc);

// Period ≤ |states| and threshold ≤ 4·|states|²; returns a description of the
// first violation or an empty string.
std::string check_parikh_bounds(const UnaryNfa &n,
                                const std::vector<SemilinearSet> &sets);

using VertexLabels = std::map<uint32_t, SemilinearSet>;
VertexLabels label_vertices(const Subgraph &sub,
                            ParikhAlgorithm algo = ParikhAlgorithm::Scc);

AnnotatedFormula clause_with_timepoints(const SnfClause &c,
                                        const SemilinearSet &I);
// Compact rendering, e.g. G[2N+1](~[2N+1]c | X[2N+2] ~[2N+2]a).
std::string render_clause(const SnfClause &c, const SemilinearSet &I);

struct UcClause {
  size_t index; // position in the starting clause list
  SnfClause clause;
  SemilinearSet set;
};

std::vector<UcClause> uc_with_timepoints(const ResolutionGraph &g,
                                         const Subgraph &sub,
                                         const VertexLabels &labels);
AnnotatedFormula conjoin(const std::vector<UcClause> &uc);

// Lemma checks; return descriptions of violations.
std::vector<std::string> check_lemmas(const ResolutionGraph &g,
                                      const Subgraph &sub,
                                      const VertexLabels &labels);

} // namespace trc
