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
#include "trc/snf.hpp"
#include "trc/timepoints.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace trc {

using Letter = std::set<std::string>;

struct LassoWord {
  std::vector<Letter> prefix;
  std::vector<Letter> loop;

  const Letter &at(uint64_t i) const;
  std::string str() const;
  // "{p,q}.{}.{p} ; {p}.{q}"
  static LassoWord parse(std::string_view text);
};

bool eval_ltl(const LassoWord &w, const Formula &f);
bool eval_ltlp(const LassoWord &w, const AnnotatedFormula &a);

// row[s][k] for k = 0..bound.
std::vector<std::vector<char>> parikh_bruteforce(const UnaryNfa &n,
                                                 uint64_t bound);

enum class Profile { RandomClauses, UnsatByConstruction, Counters };
const char *profile_name(Profile p);
Profile parse_profile(std::string_view s);

struct Instance {
  std::string name;
  bool is_ltl = false;
  Formula formula;
  std::vector<SnfClause> clauses;

  std::string text() const;
};

std::vector<Instance> sample_instances(uint64_t seed, size_t count,
                                       Profile profile);

using Rng = std::mt19937_64;
uint64_t below(Rng &rng, uint64_t n);
LassoWord sample_word(Rng &rng, const std::vector<std::string> &props,
                      size_t max_prefix = 6, size_t max_loop = 6);
Formula random_formula(Rng &rng, const std::vector<std::string> &props,
                       int depth);
UnaryNfa random_nfa(Rng &rng, uint32_t max_states);

std::vector<std::string> props_of(const AnnotatedFormula &a);

uint64_t default_seed();

} // namespace trc
