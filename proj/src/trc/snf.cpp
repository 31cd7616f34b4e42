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

#include "trc/snf.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace trc {

const char *kind_name(ClauseKind k) {
  switch (k) {
  case ClauseKind::Initial: return "initial";
  case ClauseKind::Global: return "global";
  case ClauseKind::Eventuality: return "eventuality";
  }
  return "?";
}

const char *slot_name(Slot s) {
  switch (s) {
  case Slot::Now: return "now";
  case Slot::Next: return "next";
  case Slot::Ev: return "ev";
  }
  return "?";
}

std::string waits_for_name(const Literal &l) {
  return (l.positive ? "_w_" : "_wn_") + l.name;
}

namespace {
void sort_unique(std::vector<Literal> &v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string join(const std::vector<Literal> &v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += " | ";
    s += v[i].str();
  }
  return s;
}
} // namespace

SnfClause SnfClause::initial(std::vector<Literal> now) {
  SnfClause c{ClauseKind::Initial, std::move(now), {}, {}};
  c.normalize();
  return c;
}

SnfClause SnfClause::global(std::vector<Literal> now,
                            std::vector<Literal> next) {
  SnfClause c{ClauseKind::Global, std::move(now), std::move(next), {}};
  c.normalize();
  return c;
}

SnfClause SnfClause::eventuality(std::vector<Literal> now, Literal ev) {
  SnfClause c{ClauseKind::Eventuality, std::move(now), {}, std::move(ev)};
  c.normalize();
  return c;
}

void SnfClause::normalize() {
  sort_unique(now);
  sort_unique(next);
}

std::string SnfClause::str() const {
  switch (kind) {
  case ClauseKind::Initial:
    return now.empty() ? "false" : join(now);
  case ClauseKind::Global: {
    std::string body = join(now);
    if (!next.empty()) {
      if (!body.empty())
        body += " | ";
      body += "X(" + join(next) + ")";
    }
    return "G(" + (body.empty() ? std::string("false") : body) + ")";
  }
  case ClauseKind::Eventuality: {
    std::string body = join(now);
    if (!body.empty())
      body += " | ";
    return "G(" + body + "F " + ev->str() + ")";
  }
  }
  return "?";
}

SnfParseError::SnfParseError(int l, const std::string &msg)
    : std::runtime_error("line " + std::to_string(l) + ": " + msg), line(l) {}

namespace {

struct ClauseLexer {
  std::string_view s;
  size_t i = 0;
  bool allow_reserved;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
  }
  bool eat(std::string_view t) {
    ws();
    if (s.substr(i, t.size()) == t) {
      if (std::isalpha(static_cast<unsigned char>(t.back())) &&
          i + t.size() < s.size() &&
          (std::isalnum(static_cast<unsigned char>(s[i + t.size()])) ||
           s[i + t.size()] == '_'))
        return false;
      i += t.size();
      return true;
    }
    return false;
  }
  bool peek(std::string_view t) {
    size_t save = i;
    bool r = eat(t);
    i = save;
    return r;
  }
  [[noreturn]] void fail(const std::string &m) {
    throw std::runtime_error(m + " at column " + std::to_string(i + 1));
  }
  Literal literal() {
    bool pos = !eat("~");
    ws();
    size_t b = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                            s[i] == '_'))
      ++i;
    std::string name(s.substr(b, i - b));
    if (!is_identifier(name))
      fail("expected literal");
    if (name == "X" || name == "F" || name == "G" || name == "true" ||
        name == "false")
      fail("keyword '" + name + "' used as literal");
    if (name[0] == '_' && !allow_reserved)
      fail("identifier '" + name + "' uses reserved prefix '_'");
    return {name, pos};
  }
  // Disjunction of literals, or 'false' for the empty one.
  std::vector<Literal> disjunction() {
    std::vector<Literal> out;
    if (eat("false"))
      return out;
    do
      out.push_back(literal());
    while (eat("|"));
    return out;
  }
};

} // namespace

SnfClause parse_snf_clause(std::string_view text, bool allow_reserved) {
  ClauseLexer lx{text, 0, allow_reserved};
  SnfClause c;
  if (lx.eat("G")) {
    if (!lx.eat("("))
      lx.fail("expected '(' after G");
    c.kind = ClauseKind::Global;
    bool first = true;
    bool seen_false = false;
    do {
      if (lx.eat("X")) {
        if (!c.next.empty())
          lx.fail("duplicate X part");
        if (lx.eat("(")) {
          c.next = lx.disjunction();
          if (!lx.eat(")"))
            lx.fail("expected ')'");
        } else {
          c.next.push_back(lx.literal());
        }
      } else if (lx.eat("F")) {
        if (c.ev)
          lx.fail("duplicate eventuality");
        c.ev = lx.literal();
        c.kind = ClauseKind::Eventuality;
      } else if (first && lx.eat("false")) {
        seen_false = true;
      } else {
        if (!c.next.empty() || c.ev)
          lx.fail("now-literal after X/F part");
        c.now.push_back(lx.literal());
      }
      first = false;
    } while (!seen_false && lx.eat("|"));
    if (!lx.eat(")"))
      lx.fail("expected ')'");
    if (c.ev && !c.next.empty())
      lx.fail("eventuality clause with X part");
  } else {
    c.kind = ClauseKind::Initial;
    c.now = lx.disjunction();
  }
  lx.ws();
  if (lx.i != text.size())
    lx.fail("trailing input");
  c.normalize();
  return c;
}

std::vector<SnfClause> parse_snf(std::string_view text, bool allow_reserved) {
  std::vector<SnfClause> out;
  int line = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t e = text.find('\n', pos);
    if (e == std::string_view::npos)
      e = text.size();
    std::string_view l = text.substr(pos, e - pos);
    ++line;
    if (auto h = l.find('#'); h != std::string_view::npos)
      l = l.substr(0, h);
    bool blank = std::all_of(l.begin(), l.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c));
    });
    if (!blank) {
      try {
        out.push_back(parse_snf_clause(l, allow_reserved));
      } catch (const std::runtime_error &ex) {
        throw SnfParseError(line, ex.what());
      }
    }
    pos = e + 1;
  }
  return out;
}

std::string print_snf(const std::vector<SnfClause> &clauses) {
  std::string out;
  for (auto &c : clauses)
    out += c.str() + "\n";
  return out;
}

namespace {

// Operand reference: a literal with a mark, or a Boolean constant.
struct Ref {
  std::optional<Literal> lit;
  bool value = false;
  OccId occ;
  bool marked = false;

  Ref neg() const {
    Ref r = *this;
    if (r.lit)
      r.lit = r.lit->negated();
    else
      r.value = !r.value;
    return r;
  }
};

class Translator {
public:
  Translation run(const Formula &f) {
    if (f.op == Op::True)
      return std::move(out_);
    if (f.op == Op::False) {
      emit_initial();
      return std::move(out_);
    }
    OccId root;
    assign(f, root);
    out_.occ.root = name_of(root);
    emit_initial(Literal{out_.occ.root, true});
    walk(f, root, Polarity::Positive);
    return std::move(out_);
  }

private:
  void assign(const Formula &f, OccId &path) {
    if (f.op == Op::Prop)
      out_.occ.proxy[path] = f.name;
    else if (!is_atomic(f.op))
      out_.occ.proxy[path] = "_x" + std::to_string(counter_++);
    for (uint32_t i = 0; i < f.kids.size(); ++i) {
      path.push_back(i);
      assign(f.kids[i], path);
      path.pop_back();
    }
  }

  const std::string &name_of(const OccId &p) { return out_.occ.proxy.at(p); }

  void emit_initial(std::optional<Literal> l = std::nullopt) {
    SnfClause c;
    c.kind = ClauseKind::Initial;
    if (l)
      c.now.push_back(*l);
    out_.clauses.push_back(c);
    out_.occ.marks.emplace_back();
  }

  Ref ref(const Formula &parent, const OccId &path, uint32_t i) {
    const Formula &k = parent.kids[i];
    Ref r;
    r.occ = path;
    r.occ.push_back(i);
    if (k.op == Op::True || k.op == Op::False) {
      r.value = k.op == Op::True;
      return r;
    }
    r.lit = Literal{name_of(r.occ), true};
    r.marked = true;
    return r;
  }

  Ref self(const OccId &path, bool positive) {
    Ref r;
    r.lit = Literal{name_of(path), positive};
    return r;
  }

  // Builds G(now | X(next)) or G(now | F ev); constants fold away.
  void clause(std::vector<Ref> now, std::vector<Ref> next = {},
              std::optional<Ref> ev = std::nullopt) {
    SnfClause c;
    std::vector<Mark> marks;
    auto place = [&](const Ref &r, std::vector<Literal> &dst, Slot s) {
      if (!r.lit) {
        return r.value;
      }
      dst.push_back(*r.lit);
      if (r.marked)
        marks.push_back({r.occ, s});
      return false;
    };
    for (auto &r : now)
      if (place(r, c.now, Slot::Now))
        return;
    for (auto &r : next)
      if (place(r, c.next, Slot::Next))
        return;
    c.kind = ClauseKind::Global;
    if (ev) {
      if (!ev->lit) {
        if (ev->value)
          return;
      } else {
        c.kind = ClauseKind::Eventuality;
        c.ev = ev->lit;
        if (ev->marked)
          marks.push_back({ev->occ, Slot::Ev});
      }
    }
    c.normalize();
    out_.clauses.push_back(std::move(c));
    out_.occ.marks.push_back(std::move(marks));
  }

  void walk(const Formula &f, OccId &path, Polarity pol) {
    if (is_atomic(f.op))
      return;
    bool pos = pol == Polarity::Positive;
    Ref nx = self(path, !pos);   // guard literal: ~x or x
    Ref sx = self(path, pos);    // self reference for X-parts: x or ~x
    auto r = [&](uint32_t i) { return ref(f, path, i); };
    if (pos) {
      switch (f.op) {
      case Op::Not: clause({nx, r(0).neg()}); break;
      case Op::And: clause({nx, r(0)}); clause({nx, r(1)}); break;
      case Op::Or: clause({nx, r(0), r(1)}); break;
      case Op::Implies: clause({nx, r(0).neg(), r(1)}); break;
      case Op::Next: clause({nx}, {r(0)}); break;
      case Op::Globally: clause({nx}, {sx}); clause({nx, r(0)}); break;
      case Op::Finally: clause({nx}, {}, r(0)); break;
      case Op::Until:
        clause({nx, r(1), r(0)});
        clause({nx, r(1)}, {sx});
        clause({nx}, {}, r(1));
        break;
      case Op::Release:
        clause({nx, r(1)});
        clause({nx, r(0)}, {sx});
        break;
      default: break;
      }
    } else {
      switch (f.op) {
      case Op::Not: clause({nx, r(0)}); break;
      case Op::And: clause({nx, r(0).neg(), r(1).neg()}); break;
      case Op::Or: clause({nx, r(0).neg()}); clause({nx, r(1).neg()}); break;
      case Op::Implies: clause({nx, r(0)}); clause({nx, r(1).neg()}); break;
      case Op::Next: clause({nx}, {r(0).neg()}); break;
      case Op::Globally: clause({nx}, {}, r(0).neg()); break;
      case Op::Finally: clause({nx}, {sx}); clause({nx, r(0).neg()}); break;
      case Op::Until:
        clause({nx, r(1).neg()});
        clause({nx, r(0).neg()}, {sx});
        break;
      case Op::Release:
        clause({nx, r(1).neg(), r(0).neg()});
        clause({nx, r(1).neg()}, {sx});
        clause({nx}, {}, r(1).neg());
        break;
      default: break;
      }
    }
    for (uint32_t i = 0; i < f.kids.size(); ++i) {
      path.push_back(i);
      walk(f.kids[i], path, child_polarity(f.op, i, pol));
      path.pop_back();
    }
  }

  Translation out_;
  int counter_ = 0;
};

std::set<OccId> surviving(const std::vector<size_t> &uc,
                          const OccurrenceMap &occ) {
  std::set<OccId> s;
  for (size_t i : uc) {
    if (i >= occ.marks.size())
      throw ContractViolation("uc clause " + std::to_string(i) +
                              " is not part of the translation");
    for (auto &m : occ.marks[i])
      s.insert(m.occ);
  }
  return s;
}

Formula replace(const Formula &f, OccId &path, Polarity pol,
                const std::set<OccId> &keep) {
  if (!path.empty() && !is_atomic(f.op) && !keep.count(path))
    return Formula::constant(pol == Polarity::Positive);
  if (!path.empty() && f.op == Op::Prop && !keep.count(path))
    return Formula::constant(pol == Polarity::Positive);
  Formula g{f.op, f.name, {}};
  for (uint32_t i = 0; i < f.kids.size(); ++i) {
    path.push_back(i);
    g.kids.push_back(replace(f.kids[i], path, child_polarity(f.op, i, pol), keep));
    path.pop_back();
  }
  return g;
}

} // namespace

Translation translate(const Formula &f) { return Translator().run(f); }

Formula map_uc_to_ltl(const std::vector<size_t> &uc, const OccurrenceMap &occ,
                      const Formula &f) {
  auto keep = surviving(uc, occ);
  OccId path;
  return replace(f, path, Polarity::Positive, keep);
}

AnnotatedFormula annotate_ltl_uc(const std::vector<AnnotatedClauseRef> &uc,
                                 const OccurrenceMap &occ, const Formula &f,
                                 const Formula &f_uc) {
  std::map<OccId, SemilinearSet> sets;
  for (auto &ac : uc) {
    if (ac.clause >= occ.marks.size())
      throw ContractViolation("uc clause " + std::to_string(ac.clause) +
                              " is not part of the translation");
    for (auto &m : occ.marks[ac.clause]) {
      SemilinearSet s;
      switch (m.slot) {
      case Slot::Now: s = ac.set; break;
      case Slot::Next: s = ac.set.shift(1); break;
      case Slot::Ev: s = ac.set.tail_from_min(); break;
      }
      auto [it, fresh] = sets.emplace(m.occ, s);
      if (!fresh)
        it->second = it->second.unite(s);
    }
  }
  OccId path;
  auto rec = [&](auto &self, const Formula &orig,
                 const Formula &cur) -> AnnotatedFormula {
    AnnotatedFormula a{cur.op, cur.name, {}, {}};
    if (orig.op != cur.op && is_atomic(cur.op))
      return a;
    for (uint32_t i = 0; i < cur.kids.size(); ++i) {
      path.push_back(i);
      const Formula &ok = orig.kids[i];
      const Formula &ck = cur.kids[i];
      if (ok.op == Op::True || ok.op == Op::False) {
        a.sets.push_back(SemilinearSet::naturals());
      } else if (ck.op != ok.op) {
        a.sets.push_back(SemilinearSet::empty());
      } else {
        auto it = sets.find(path);
        if (it == sets.end())
          throw ContractViolation("occurrence " + occ_str(path) +
                                  " has no surviving marked reference");
        a.sets.push_back(it->second);
      }
      a.kids.push_back(self(self, ok, ck));
      path.pop_back();
    }
    return a;
  };
  return rec(rec, f, f_uc);
}

} // namespace trc
