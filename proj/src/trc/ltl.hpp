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

#include "trc/semilinear.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trc {

enum class Op : uint8_t {
  True,
  False,
  Prop,
  Not,
  And,
  Or,
  Implies,
  Next,
  Until,
  Release,
  Finally,
  Globally,
};

enum class Polarity : uint8_t { Positive, Negative };

inline Polarity flip(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

int arity(Op op);
bool is_atomic(Op op);
const char *op_token(Op op);

// Preorder child-index path from the root.
using OccId = std::vector<uint32_t>;
std::string occ_str(const OccId &id);

struct Formula {
  Op op = Op::True;
  std::string name;
  std::vector<Formula> kids;

  static Formula constant(bool v) { return {v ? Op::True : Op::False, {}, {}}; }
  static Formula prop(std::string n) { return {Op::Prop, std::move(n), {}}; }
  static Formula unary(Op op, Formula a) { return {op, {}, {std::move(a)}}; }
  static Formula binary(Op op, Formula a, Formula b) {
    return {op, {}, {std::move(a), std::move(b)}};
  }

  bool operator==(const Formula &) const = default;
  size_t size() const;
};

// Polarity of the i-th operand of a node with polarity p.
Polarity child_polarity(Op op, size_t i, Polarity p);

const Formula &at(const Formula &f, const OccId &occ);
Polarity polarity_of(const Formula &f, const OccId &occ);

// Operator nodes carry one set per operand; the root has none.
struct AnnotatedFormula {
  Op op = Op::True;
  std::string name;
  std::vector<SemilinearSet> sets;
  std::vector<AnnotatedFormula> kids;

  bool operator==(const AnnotatedFormula &) const = default;
  bool same(const AnnotatedFormula &o) const;
  Formula strip() const;
  static AnnotatedFormula with_sets(const Formula &f, const SemilinearSet &s);
};

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int col, const std::string &msg);
  int line, col;
};

struct ParseOptions {
  bool allow_reserved = false;
};

Formula parse_ltl(std::string_view text, ParseOptions opts = {});
AnnotatedFormula parse_ltlp(std::string_view text, ParseOptions opts = {});

std::string print_ltl(const Formula &f);
std::string print_ltlp(const AnnotatedFormula &a);

bool is_identifier(std::string_view s);
void collect_props(const Formula &f, std::vector<std::string> &out);

} // namespace trc
