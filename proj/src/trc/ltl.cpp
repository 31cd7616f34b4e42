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

#include "trc/ltl.hpp"

#include <cctype>

namespace trc {

int arity(Op op) {
  switch (op) {
  case Op::True:
  case Op::False:
  case Op::Prop:
    return 0;
  case Op::Not:
  case Op::Next:
  case Op::Finally:
  case Op::Globally:
    return 1;
  default:
    return 2;
  }
}

bool is_atomic(Op op) { return arity(op) == 0; }

const char *op_token(Op op) {
  switch (op) {
  case Op::True: return "true";
  case Op::False: return "false";
  case Op::Prop: return "";
  case Op::Not: return "~";
  case Op::And: return "&";
  case Op::Or: return "|";
  case Op::Implies: return "->";
  case Op::Next: return "X";
  case Op::Until: return "U";
  case Op::Release: return "R";
  case Op::Finally: return "F";
  case Op::Globally: return "G";
  }
  return "?";
}

std::string occ_str(const OccId &id) {
  std::string s;
  for (size_t i = 0; i < id.size(); ++i) {
    if (i)
      s += ".";
    s += std::to_string(id[i]);
  }
  return s.empty() ? "root" : s;
}

size_t Formula::size() const {
  size_t n = 1;
  for (auto &k : kids)
    n += k.size();
  return n;
}

Polarity child_polarity(Op op, size_t i, Polarity p) {
  if (op == Op::Not || (op == Op::Implies && i == 0))
    return flip(p);
  return p;
}

const Formula &at(const Formula &f, const OccId &occ) {
  const Formula *cur = &f;
  for (uint32_t i : occ) {
    if (i >= cur->kids.size())
      throw std::out_of_range("invalid occurrence id " + occ_str(occ));
    cur = &cur->kids[i];
  }
  return *cur;
}

Polarity polarity_of(const Formula &f, const OccId &occ) {
  const Formula *cur = &f;
  Polarity p = Polarity::Positive;
  for (uint32_t i : occ) {
    if (i >= cur->kids.size())
      throw std::out_of_range("invalid occurrence id " + occ_str(occ));
    p = child_polarity(cur->op, i, p);
    cur = &cur->kids[i];
  }
  return p;
}

bool AnnotatedFormula::same(const AnnotatedFormula &o) const {
  if (op != o.op || name != o.name || sets.size() != o.sets.size() ||
      kids.size() != o.kids.size())
    return false;
  for (size_t i = 0; i < sets.size(); ++i)
    if (!sets[i].equals(o.sets[i]))
      return false;
  for (size_t i = 0; i < kids.size(); ++i)
    if (!kids[i].same(o.kids[i]))
      return false;
  return true;
}

Formula AnnotatedFormula::strip() const {
  Formula f{op, name, {}};
  for (auto &k : kids)
    f.kids.push_back(k.strip());
  return f;
}

AnnotatedFormula AnnotatedFormula::with_sets(const Formula &f,
                                             const SemilinearSet &s) {
  AnnotatedFormula a{f.op, f.name, {}, {}};
  for (auto &k : f.kids) {
    a.sets.push_back(s);
    a.kids.push_back(with_sets(k, s));
  }
  return a;
}

ParseError::ParseError(int l, int c, const std::string &msg)
    : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " +
                         msg),
      line(l), col(c) {}

bool is_identifier(std::string_view s) {
  if (s.empty())
    return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

void collect_props(const Formula &f, std::vector<std::string> &out) {
  if (f.op == Op::Prop) {
    for (auto &n : out)
      if (n == f.name)
        return;
    out.push_back(f.name);
  }
  for (auto &k : f.kids)
    collect_props(k, out);
}

namespace {

enum class Tok { End, Ident, True, False, Not, And, Or, Implies, Next, Until,
                 Release, Finally, Globally, LParen, RParen, Sets };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
public:
  Lexer(std::string_view s, bool annotated) : s_(s), annotated_(annotated) {}

  Token next() {
    skip();
    Token t{Tok::End, {}, line_, col_};
    if (i_ >= s_.size())
      return t;
    char c = s_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t b = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                                s_[i_] == '_'))
        adv();
      t.text = std::string(s_.substr(b, i_ - b));
      if (t.text == "true") t.kind = Tok::True;
      else if (t.text == "false") t.kind = Tok::False;
      else if (t.text == "X") t.kind = Tok::Next;
      else if (t.text == "F") t.kind = Tok::Finally;
      else if (t.text == "G") t.kind = Tok::Globally;
      else if (t.text == "U") t.kind = Tok::Until;
      else if (t.text == "R") t.kind = Tok::Release;
      else t.kind = Tok::Ident;
      return t;
    }
    switch (c) {
    case '~': adv(); t.kind = Tok::Not; return t;
    case '&': adv(); t.kind = Tok::And; return t;
    case '|': adv(); t.kind = Tok::Or; return t;
    case '(': adv(); t.kind = Tok::LParen; return t;
    case ')': adv(); t.kind = Tok::RParen; return t;
    case '-':
      if (i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
        adv();
        adv();
        t.kind = Tok::Implies;
        return t;
      }
      break;
    case '[':
      if (annotated_) {
        adv();
        int depth = 0;
        size_t b = i_;
        while (i_ < s_.size() && !(depth == 0 && s_[i_] == ']')) {
          if (s_[i_] == '{') ++depth;
          if (s_[i_] == '}') --depth;
          adv();
        }
        if (i_ >= s_.size())
          throw ParseError(t.line, t.col, "unterminated '['");
        t.text = std::string(s_.substr(b, i_ - b));
        adv();
        t.kind = Tok::Sets;
        return t;
      }
      break;
    default:
      break;
    }
    throw ParseError(line_, col_, std::string("unknown token '") + c + "'");
  }

private:
  void adv() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        adv();
      } else if (s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n')
          adv();
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  bool annotated_;
  size_t i_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
public:
  Parser(std::string_view s, bool annotated, ParseOptions o)
      : lx_(s, annotated), annotated_(annotated), opts_(o) {
    cur_ = lx_.next();
  }

  AnnotatedFormula parse() {
    AnnotatedFormula f = implies();
    if (cur_.kind != Tok::End)
      fail("unexpected '" + describe() + "'");
    return f;
  }

private:
  std::string describe() const {
    if (cur_.kind == Tok::End) return "end of input";
    if (!cur_.text.empty()) return cur_.text;
    switch (cur_.kind) {
    case Tok::Not: return "~";
    case Tok::And: return "&";
    case Tok::Or: return "|";
    case Tok::Implies: return "->";
    case Tok::LParen: return "(";
    case Tok::RParen: return ")";
    default: return "token";
    }
  }
  [[noreturn]] void fail(const std::string &m) {
    throw ParseError(cur_.line, cur_.col, m);
  }
  void advance() { cur_ = lx_.next(); }

  std::vector<SemilinearSet> sets(size_t n) {
    std::vector<SemilinearSet> out;
    if (!annotated_)
      return out;
    if (cur_.kind != Tok::Sets) {
      out.assign(n, SemilinearSet::naturals());
      return out;
    }
    std::string text = cur_.text;
    int l = cur_.line, c = cur_.col;
    advance();
    std::vector<std::string> parts;
    int depth = 0;
    std::string acc;
    for (char ch : text) {
      if (ch == '{') ++depth;
      if (ch == '}') --depth;
      if (ch == ',' && depth == 0) {
        parts.push_back(acc);
        acc.clear();
      } else {
        acc += ch;
      }
    }
    parts.push_back(acc);
    if (parts.size() != n)
      throw ParseError(l, c, "expected " + std::to_string(n) +
                                 " set(s) after operator");
    try {
      for (auto &p : parts)
        out.push_back(SemilinearSet::parse(p));
    } catch (const SemilinearError &e) {
      throw ParseError(l, c, e.what());
    }
    return out;
  }

  AnnotatedFormula implies() {
    AnnotatedFormula lhs = disj();
    if (cur_.kind == Tok::Implies) {
      advance();
      auto s = sets(2);
      AnnotatedFormula rhs = implies();
      return {Op::Implies, {}, std::move(s), {std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  AnnotatedFormula disj() {
    AnnotatedFormula lhs = conj();
    while (cur_.kind == Tok::Or) {
      advance();
      auto s = sets(2);
      AnnotatedFormula rhs = conj();
      lhs = {Op::Or, {}, std::move(s), {std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  AnnotatedFormula conj() {
    AnnotatedFormula lhs = temporal();
    while (cur_.kind == Tok::And) {
      advance();
      auto s = sets(2);
      AnnotatedFormula rhs = temporal();
      lhs = {Op::And, {}, std::move(s), {std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  AnnotatedFormula temporal() {
    AnnotatedFormula lhs = unary();
    if (cur_.kind == Tok::Until || cur_.kind == Tok::Release) {
      Op op = cur_.kind == Tok::Until ? Op::Until : Op::Release;
      advance();
      auto s = sets(2);
      AnnotatedFormula rhs = temporal();
      return {op, {}, std::move(s), {std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  AnnotatedFormula unary() {
    Op op;
    switch (cur_.kind) {
    case Tok::Not: op = Op::Not; break;
    case Tok::Next: op = Op::Next; break;
    case Tok::Finally: op = Op::Finally; break;
    case Tok::Globally: op = Op::Globally; break;
    default: return atom();
    }
    advance();
    auto s = sets(1);
    AnnotatedFormula k = unary();
    return {op, {}, std::move(s), {std::move(k)}};
  }

  AnnotatedFormula atom() {
    switch (cur_.kind) {
    case Tok::True:
      advance();
      return {Op::True, {}, {}, {}};
    case Tok::False:
      advance();
      return {Op::False, {}, {}, {}};
    case Tok::Ident: {
      if (cur_.text[0] == '_' && !opts_.allow_reserved)
        fail("identifier '" + cur_.text + "' uses reserved prefix '_'");
      AnnotatedFormula a{Op::Prop, cur_.text, {}, {}};
      advance();
      return a;
    }
    case Tok::LParen: {
      advance();
      AnnotatedFormula a = implies();
      if (cur_.kind != Tok::RParen)
        fail("expected ')' but found '" + describe() + "'");
      advance();
      return a;
    }
    default:
      fail("unexpected '" + describe() + "'");
    }
  }

  Lexer lx_;
  bool annotated_;
  ParseOptions opts_;
  Token cur_;
};

void print_node(const AnnotatedFormula &a, bool ann, std::string &out) {
  switch (a.op) {
  case Op::True:
  case Op::False:
    out += op_token(a.op);
    return;
  case Op::Prop:
    out += a.name;
    return;
  default:
    break;
  }
  auto set_text = [&](size_t n) {
    if (!ann)
      return;
    out += "[";
    for (size_t i = 0; i < n; ++i) {
      if (i)
        out += ",";
      out += a.sets[i].str();
    }
    out += "]";
  };
  if (arity(a.op) == 1) {
    const auto &k = a.kids[0];
    bool bare = is_atomic(k.op) || k.op == Op::Not;
    out += op_token(a.op);
    set_text(1);
    if (bare) {
      if (ann || a.op != Op::Not)
        out += " ";
      print_node(k, ann, out);
    } else {
      out += "(";
      print_node(k, ann, out);
      out += ")";
    }
    return;
  }
  auto operand = [&](const AnnotatedFormula &k) {
    if (is_atomic(k.op)) {
      print_node(k, ann, out);
    } else {
      out += "(";
      print_node(k, ann, out);
      out += ")";
    }
  };
  operand(a.kids[0]);
  out += " ";
  out += op_token(a.op);
  set_text(2);
  out += " ";
  operand(a.kids[1]);
}

AnnotatedFormula lift(const Formula &f) {
  AnnotatedFormula a{f.op, f.name, {}, {}};
  for (auto &k : f.kids)
    a.kids.push_back(lift(k));
  return a;
}

} // namespace

Formula parse_ltl(std::string_view text, ParseOptions opts) {
  return Parser(text, false, opts).parse().strip();
}

AnnotatedFormula parse_ltlp(std::string_view text, ParseOptions opts) {
  return Parser(text, true, opts).parse();
}

std::string print_ltl(const Formula &f) {
  std::string out;
  print_node(lift(f), false, out);
  return out;
}

std::string print_ltlp(const AnnotatedFormula &a) {
  std::string out;
  print_node(a, true, out);
  return out;
}

} // namespace trc
