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

#include "trc/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace trc {

const Letter &LassoWord::at(uint64_t i) const {
  if (i < prefix.size())
    return prefix[i];
  return loop[(i - prefix.size()) % loop.size()];
}

namespace {
std::string letters(const std::vector<Letter> &ls) {
  std::string s;
  for (size_t i = 0; i < ls.size(); ++i) {
    if (i)
      s += ".";
    s += "{";
    bool first = true;
    for (auto &p : ls[i]) {
      if (!first)
        s += ",";
      s += p;
      first = false;
    }
    s += "}";
  }
  return s;
}
} // namespace

std::string LassoWord::str() const {
  return letters(prefix) + (prefix.empty() ? "; " : " ; ") + letters(loop);
}

LassoWord LassoWord::parse(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos)
    throw std::invalid_argument("word: missing ';' between prefix and loop");
  auto part = [](std::string_view s) {
    std::vector<Letter> out;
    size_t i = 0;
    auto ws = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
    };
    ws();
    if (i == s.size())
      return out;
    for (;;) {
      ws();
      if (i >= s.size() || s[i] != '{')
        throw std::invalid_argument("word: expected '{'");
      ++i;
      Letter l;
      for (;;) {
        ws();
        if (i < s.size() && s[i] == '}') {
          ++i;
          break;
        }
        size_t b = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
          ++i;
        if (b == i)
          throw std::invalid_argument("word: expected proposition");
        l.insert(std::string(s.substr(b, i - b)));
        ws();
        if (i < s.size() && s[i] == ',')
          ++i;
      }
      out.push_back(std::move(l));
      ws();
      if (i == s.size())
        break;
      if (s[i] != '.')
        throw std::invalid_argument("word: expected '.' between letters");
      ++i;
    }
    return out;
  };
  LassoWord w{part(text.substr(0, semi)), part(text.substr(semi + 1))};
  if (w.loop.empty())
    throw std::invalid_argument("word: loop must be nonempty");
  return w;
}

namespace {

using Vals = std::vector<char>;

// Positions 0..size-1; the last position steps back to `back`.
struct Frame {
  uint64_t size;
  uint64_t back;
  const LassoWord *w;
  uint64_t succ(uint64_t i) const { return i + 1 < size ? i + 1 : back; }
};

Vals until(const Frame &fr, const Vals &a, const Vals &b) {
  Vals v(fr.size, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (uint64_t i = fr.size; i-- > 0;) {
      char n = b[i] || (a[i] && v[fr.succ(i)]);
      if (n != v[i]) {
        v[i] = n;
        changed = true;
      }
    }
  }
  return v;
}

Vals release(const Frame &fr, const Vals &a, const Vals &b) {
  Vals v(fr.size, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (uint64_t i = fr.size; i-- > 0;) {
      char n = b[i] && (a[i] || v[fr.succ(i)]);
      if (n != v[i]) {
        v[i] = n;
        changed = true;
      }
    }
  }
  return v;
}

struct Evaluator {
  Frame fr;
  bool annotated;

  Vals mask(Vals v, const SemilinearSet *s, Polarity pol) const {
    if (!annotated)
      return v;
    for (uint64_t i = 0; i < fr.size; ++i) {
      bool in = s->contains(i);
      v[i] = pol == Polarity::Positive ? (v[i] || !in) : (v[i] && in);
    }
    return v;
  }

  Vals eval(const AnnotatedFormula &a, Polarity pol) const {
    Vals out(fr.size, 0);
    switch (a.op) {
    case Op::True:
      std::fill(out.begin(), out.end(), 1);
      return out;
    case Op::False:
      return out;
    case Op::Prop:
      for (uint64_t i = 0; i < fr.size; ++i)
        out[i] = fr.w->at(i).count(a.name) > 0;
      return out;
    default:
      break;
    }
    auto operand = [&](size_t k) {
      Polarity cp = child_polarity(a.op, k, pol);
      const SemilinearSet *s = annotated ? &a.sets[k] : nullptr;
      return mask(eval(a.kids[k], cp), s, cp);
    };
    switch (a.op) {
    case Op::Not: {
      Vals v = operand(0);
      for (uint64_t i = 0; i < fr.size; ++i)
        out[i] = !v[i];
      return out;
    }
    case Op::And:
    case Op::Or: {
      Vals l = operand(0), r = operand(1);
      for (uint64_t i = 0; i < fr.size; ++i)
        out[i] = a.op == Op::And ? (l[i] && r[i]) : (l[i] || r[i]);
      return out;
    }
    case Op::Implies: {
      // (~_I a) |_{I,I'} b
      Vals l = operand(0);
      for (auto &x : l)
        x = !x;
      l = mask(std::move(l), annotated ? &a.sets[0] : nullptr, pol);
      Vals r = operand(1);
      for (uint64_t i = 0; i < fr.size; ++i)
        out[i] = l[i] || r[i];
      return out;
    }
    case Op::Next: {
      Vals v = operand(0);
      for (uint64_t i = 0; i < fr.size; ++i)
        out[i] = v[fr.succ(i)];
      return out;
    }
    case Op::Finally:
      return until(fr, Vals(fr.size, 1), operand(0));
    case Op::Globally:
      return release(fr, Vals(fr.size, 0), operand(0));
    case Op::Until:
      return until(fr, operand(0), operand(1));
    case Op::Release:
      return release(fr, operand(0), operand(1));
    default:
      return out;
    }
  }
};

void scan_sets(const AnnotatedFormula &a, uint64_t &thr, uint64_t &per) {
  for (auto &s : a.sets) {
    if (!s.is_empty())
      thr = std::max(thr, s.threshold() + 1);
    for (auto &p : s.progressions())
      per = std::lcm(per, p.period);
    if (per > 100000)
      throw SemilinearError("eval_ltlp: period cap of 100000 exceeded");
  }
  for (auto &k : a.kids)
    scan_sets(k, thr, per);
}

AnnotatedFormula lift(const Formula &f) {
  AnnotatedFormula a{f.op, f.name, {}, {}};
  for (auto &k : f.kids)
    a.kids.push_back(lift(k));
  return a;
}

} // namespace

bool eval_ltl(const LassoWord &w, const Formula &f) {
  Frame fr{w.prefix.size() + w.loop.size(), w.prefix.size(), &w};
  Evaluator ev{fr, false};
  return ev.eval(lift(f), Polarity::Positive)[0];
}

bool eval_ltlp(const LassoWord &w, const AnnotatedFormula &a) {
  uint64_t n0 = w.prefix.size();
  uint64_t per = w.loop.size();
  scan_sets(a, n0, per);
  Frame fr{n0 + per, n0, &w};
  Evaluator ev{fr, true};
  return ev.eval(a, Polarity::Positive)[0];
}

std::vector<std::vector<char>> parikh_bruteforce(const UnaryNfa &n,
                                                 uint64_t bound) {
  std::vector<std::vector<char>> rows(n.states, std::vector<char>(bound + 1, 0));
  std::vector<std::vector<uint32_t>> adj(n.states);
  for (auto &[a, b] : n.ones)
    adj[a].push_back(b);
  std::vector<char> cur(n.states, 0);
  for (uint32_t s : n.initial)
    cur[s] = 1;
  for (uint64_t k = 0; k <= bound; ++k) {
    std::vector<char> nx(n.states, 0);
    for (uint32_t s = 0; s < n.states; ++s) {
      if (!cur[s])
        continue;
      rows[s][k] = 1;
      for (uint32_t t : adj[s])
        nx[t] = 1;
    }
    cur.swap(nx);
  }
  return rows;
}

const char *profile_name(Profile p) {
  switch (p) {
  case Profile::RandomClauses: return "random-clauses";
  case Profile::UnsatByConstruction: return "unsat-by-construction";
  case Profile::Counters: return "counters";
  }
  return "?";
}

Profile parse_profile(std::string_view s) {
  if (s == "random-clauses") return Profile::RandomClauses;
  if (s == "unsat-by-construction" || s == "unsat") return Profile::UnsatByConstruction;
  if (s == "counters" || s == "phltl") return Profile::Counters;
  throw std::invalid_argument("unknown profile '" + std::string(s) + "'");
}

std::string Instance::text() const {
  return is_ltl ? print_ltl(formula) + "\n" : print_snf(clauses);
}

uint64_t below(Rng &rng, uint64_t n) { return n ? rng() % n : 0; }

LassoWord sample_word(Rng &rng, const std::vector<std::string> &props,
                      size_t max_prefix, size_t max_loop) {
  auto letter = [&] {
    Letter l;
    for (auto &p : props)
      if (rng() & 1)
        l.insert(p);
    return l;
  };
  LassoWord w;
  size_t np = below(rng, max_prefix + 1);
  size_t nl = 1 + below(rng, max_loop);
  for (size_t i = 0; i < np; ++i)
    w.prefix.push_back(letter());
  for (size_t i = 0; i < nl; ++i)
    w.loop.push_back(letter());
  return w;
}

Formula random_formula(Rng &rng, const std::vector<std::string> &props,
                       int depth) {
  if (depth <= 0 || below(rng, 5) == 0) {
    if (below(rng, 12) == 0)
      return Formula::constant(rng() & 1);
    return Formula::prop(props[below(rng, props.size())]);
  }
  static const Op ops[] = {Op::Not, Op::And, Op::Or, Op::Implies, Op::Next,
                           Op::Until, Op::Release, Op::Finally, Op::Globally};
  Op op = ops[below(rng, std::size(ops))];
  if (arity(op) == 1)
    return Formula::unary(op, random_formula(rng, props, depth - 1));
  Formula a = random_formula(rng, props, depth - 1);
  Formula b = random_formula(rng, props, depth - 1);
  return Formula::binary(op, std::move(a), std::move(b));
}

UnaryNfa random_nfa(Rng &rng, uint32_t max_states) {
  UnaryNfa n;
  n.states = 1 + static_cast<uint32_t>(below(rng, max_states));
  n.initial = {0};
  // Mix sparse cycle-heavy and denser graphs.
  uint64_t mode = below(rng, 3);
  if (mode == 0) {
    uint32_t s = 0;
    while (s < n.states) {
      uint32_t len = 1 + static_cast<uint32_t>(below(rng, std::min<uint32_t>(n.states - s, 12)));
      for (uint32_t i = 0; i < len; ++i)
        n.ones.emplace_back(s + i, s + (i + 1) % len);
      if (s)
        n.ones.emplace_back(static_cast<uint32_t>(below(rng, s)), s);
      s += len;
    }
  } else {
    uint64_t edges = n.states * (mode == 1 ? 1 : 2) + below(rng, n.states + 1);
    for (uint64_t e = 0; e < edges; ++e)
      n.ones.emplace_back(static_cast<uint32_t>(below(rng, n.states)),
                          static_cast<uint32_t>(below(rng, n.states)));
  }
  std::sort(n.ones.begin(), n.ones.end());
  n.ones.erase(std::unique(n.ones.begin(), n.ones.end()), n.ones.end());
  return n;
}

std::vector<std::string> props_of(const AnnotatedFormula &a) {
  std::vector<std::string> out;
  collect_props(a.strip(), out);
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t default_seed() {
  if (const char *s = std::getenv("TRC_SEED"))
    return std::strtoull(s, nullptr, 10);
  return 7;
}

namespace {

Formula P(const std::string &n) { return Formula::prop(n); }
Formula Not(Formula a) { return Formula::unary(Op::Not, std::move(a)); }
Formula Xf(Formula a) { return Formula::unary(Op::Next, std::move(a)); }
Formula Ff(Formula a) { return Formula::unary(Op::Finally, std::move(a)); }
Formula Gf(Formula a) { return Formula::unary(Op::Globally, std::move(a)); }
Formula And(Formula a, Formula b) { return Formula::binary(Op::And, std::move(a), std::move(b)); }
Formula Imp(Formula a, Formula b) { return Formula::binary(Op::Implies, std::move(a), std::move(b)); }
Formula Until(Formula a, Formula b) { return Formula::binary(Op::Until, std::move(a), std::move(b)); }

Formula schema(Rng &rng, const std::string &p, const std::string &q) {
  switch (below(rng, 8)) {
  case 0:
    return And(Gf(P(p)), Ff(Not(P(p))));
  case 1:
    return And(And(P(p), Gf(Imp(P(p), Xf(P(p))))), Ff(Not(P(p))));
  case 2:
    return And(And(P(p), Gf(Imp(P(p), Xf(Xf(P(p)))))), Ff(And(Not(P(p)), Xf(Not(P(p))))));
  case 3:
    return And(Until(P(p), P(q)), Gf(Not(P(q))));
  case 4:
    return And(Gf(Ff(P(p))), Ff(Gf(Not(P(p)))));
  case 5: {
    Formula x = Not(P(p));
    for (uint64_t k = 1 + below(rng, 3); k > 0; --k)
      x = Xf(std::move(x));
    return And(Gf(P(p)), std::move(x));
  }
  case 6:
    return And(And(And(Gf(Imp(P(p), Xf(P(q)))), Gf(Imp(P(q), Xf(P(p))))), P(p)),
               Ff(Gf(And(Not(P(p)), Not(P(q))))));
  default:
    return And(And(Gf(Imp(P(p), Ff(P(q)))), P(p)), Gf(Not(P(q))));
  }
}

std::vector<SnfClause> counter(uint64_t n, bool eventual) {
  auto b = [](uint64_t i, bool pos) { return Literal{"b" + std::to_string(i), pos}; };
  std::vector<SnfClause> cs;
  for (uint64_t i = 0; i < n; ++i)
    cs.push_back(SnfClause::initial({b(i, false)}));
  cs.push_back(SnfClause::global({b(0, false)}, {b(0, false)}));
  cs.push_back(SnfClause::global({b(0, true)}, {b(0, true)}));
  for (uint64_t i = 1; i < n; ++i) {
    std::vector<Literal> notc;
    for (uint64_t j = 0; j < i; ++j)
      notc.push_back(b(j, false));
    for (uint64_t j = 0; j < i; ++j) {
      cs.push_back(SnfClause::global({b(i, false), b(j, true)}, {b(i, true)}));
      cs.push_back(SnfClause::global({b(i, true), b(j, true)}, {b(i, false)}));
    }
    auto a = notc;
    a.push_back(b(i, true));
    cs.push_back(SnfClause::global(a, {b(i, true)}));
    auto c = notc;
    c.push_back(b(i, false));
    cs.push_back(SnfClause::global(c, {b(i, false)}));
  }
  if (eventual) {
    Literal x{"done", true};
    cs.push_back(SnfClause::eventuality({}, x));
    cs.push_back(SnfClause::global({x.negated()}, {x}));
    cs.push_back(SnfClause::global({x.negated(), b(n - 1, false)}, {}));
  } else {
    std::vector<Literal> top;
    for (uint64_t i = 0; i < n; ++i)
      top.push_back(b(i, false));
    cs.push_back(SnfClause::global(top, {}));
  }
  return cs;
}

std::vector<SnfClause> random_clauses(Rng &rng) {
  static const char *names[] = {"a", "b", "c", "d"};
  uint64_t np = 2 + below(rng, 3);
  auto lit = [&] { return Literal{names[below(rng, np)], (rng() & 1) == 0}; };
  auto lits = [&](uint64_t lo, uint64_t hi) {
    std::vector<Literal> v;
    for (uint64_t k = lo + below(rng, hi - lo + 1); k > 0; --k)
      v.push_back(lit());
    return v;
  };
  std::vector<SnfClause> cs;
  uint64_t m = 3 + below(rng, 7);
  for (uint64_t i = 0; i < m; ++i) {
    uint64_t kind = below(rng, 6);
    SnfClause c;
    if (kind == 0)
      c = SnfClause::initial(lits(1, 2));
    else if (kind <= 3)
      c = SnfClause::global(lits(0, 2), lits(1, 2));
    else if (kind == 4)
      c = SnfClause::global(lits(1, 2), {});
    else
      c = SnfClause::eventuality(lits(0, 1), lit());
    if (std::find(cs.begin(), cs.end(), c) == cs.end())
      cs.push_back(std::move(c));
  }
  return cs;
}

} // namespace

std::vector<Instance> sample_instances(uint64_t seed, size_t count,
                                       Profile profile) {
  Rng rng(seed);
  std::vector<Instance> out;
  static const std::vector<std::string> pool{"p", "q", "r", "s"};
  for (size_t i = 0; i < count; ++i) {
    Instance in;
    in.name = std::string(profile_name(profile)) + "-" + std::to_string(seed) +
              "-" + std::to_string(i);
    switch (profile) {
    case Profile::RandomClauses:
      in.clauses = random_clauses(rng);
      break;
    case Profile::UnsatByConstruction: {
      std::string p = pool[below(rng, pool.size())];
      std::string q = pool[below(rng, pool.size())];
      if (q == p)
        q = pool[(std::find(pool.begin(), pool.end(), p) - pool.begin() + 1) % pool.size()];
      Formula s = schema(rng, p, q);
      Formula d = random_formula(rng, pool, 2 + static_cast<int>(below(rng, 2)));
      in.is_ltl = true;
      in.formula = (rng() & 1) ? And(std::move(d), std::move(s)) : And(std::move(s), std::move(d));
      break;
    }
    case Profile::Counters:
      in.clauses = counter(2 + below(rng, 2), rng() & 1);
      break;
    }
    out.push_back(std::move(in));
  }
  return out;
}

} // namespace trc
