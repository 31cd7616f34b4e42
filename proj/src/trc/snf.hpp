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
#include "trc/semilinear.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trc {

struct Literal {
  std::string name;
  bool positive = true;

  Literal negated() const { return {name, !positive}; }
  std::string str() const { return positive ? name : "~" + name; }
  auto operator<=>(const Literal &o) const {
    if (auto c = name <=> o.name; c != 0)
      return c;
    return o.positive <=> positive;
  }
  bool operator==(const Literal &) const = default;
};

enum class ClauseKind : uint8_t { Initial, Global, Eventuality };
const char *kind_name(ClauseKind k);

struct SnfClause {
  ClauseKind kind = ClauseKind::Initial;
  std::vector<Literal> now;
  std::vector<Literal> next;
  std::optional<Literal> ev;

  static SnfClause initial(std::vector<Literal> now);
  static SnfClause global(std::vector<Literal> now, std::vector<Literal> next);
  static SnfClause eventuality(std::vector<Literal> now, Literal ev);

  void normalize();
  bool is_empty() const {
    return kind != ClauseKind::Eventuality && now.empty() && next.empty();
  }
  std::string str() const;
  bool operator==(const SnfClause &) const = default;
};

class SnfParseError : public std::runtime_error {
public:
  SnfParseError(int line, const std::string &msg);
  int line;
};

SnfClause parse_snf_clause(std::string_view text, bool allow_reserved = false);
std::vector<SnfClause> parse_snf(std::string_view text,
                                 bool allow_reserved = false);
std::string print_snf(const std::vector<SnfClause> &clauses);

enum class Slot : uint8_t { Now, Next, Ev };
const char *slot_name(Slot s);

struct Mark {
  OccId occ;
  Slot slot;
  bool operator==(const Mark &) const = default;
};

struct OccurrenceMap {
  // Indexed by clause position in the translation.
  std::vector<std::vector<Mark>> marks;
  std::map<OccId, std::string> proxy;
  std::string root;
};

struct Translation {
  std::vector<SnfClause> clauses;
  OccurrenceMap occ;
};

Translation translate(const Formula &f);

class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// uc holds clause positions of the translation.
Formula map_uc_to_ltl(const std::vector<size_t> &uc, const OccurrenceMap &occ,
                      const Formula &f);

struct AnnotatedClauseRef {
  size_t clause;
  SemilinearSet set;
};

AnnotatedFormula annotate_ltl_uc(const std::vector<AnnotatedClauseRef> &uc,
                                 const OccurrenceMap &occ, const Formula &f,
                                 const Formula &f_uc);

std::string waits_for_name(const Literal &l);

} // namespace trc
