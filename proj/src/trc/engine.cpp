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

#include "trc/engine.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

namespace trc {

const char *rule_name(Rule r) {
  switch (r) {
  case Rule::InitII: return "init-ii";
  case Rule::InitIN: return "init-in";
  case Rule::StepNN: return "step-nn";
  case Rule::StepNX: return "step-nx";
  case Rule::StepXX: return "step-xx";
  case Rule::Aug1: return "aug1";
  case Rule::Aug2: return "aug2";
  case Rule::LoopInitX: return "loop-it-init-x";
  case Rule::LoopInitN: return "loop-it-init-n";
  case Rule::LoopInitC: return "loop-it-init-c";
  case Rule::LoopSub: return "loop-it-sub";
  case Rule::LoopConc1: return "loop-conclusion1";
  case Rule::LoopConc2: return "loop-conclusion2";
  }
  return "?";
}

int default_precedence(const Literal &l) {
  const std::string &n = l.name;
  if (n.size() > 2 && n[0] == '_' && n[1] == 'x' &&
      n.find_first_not_of("0123456789", 2) == std::string::npos)
    return 2000000000 - static_cast<int>(std::min<unsigned long>(std::stoul(n.substr(2)), 1000000000ul));
  if (n.size() > 2 && n[0] == '_' && n[1] == 'w')
    return 1;
  return 0;
}

namespace {

using Lit = uint32_t;
using Lits = std::vector<Lit>;

inline Lit neg(Lit l) { return l ^ 1u; }

uint64_t signature(const Lits &v) {
  uint64_t s = 0;
  for (Lit l : v)
    s |= uint64_t{1} << (l % 64);
  return s;
}

bool subset(const Lits &a, uint64_t sa, const Lits &b, uint64_t sb) {
  if (a.size() > b.size() || (sa & ~sb))
    return false;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool has_complement(const Lits &v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if ((v[i] ^ 1u) == v[i + 1])
      return true;
  return false;
}

Lits merge(const Lits &a, const Lits &b) {
  Lits r;
  r.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Lits without(const Lits &a, Lit l) {
  Lits r;
  r.reserve(a.size());
  for (Lit x : a)
    if (x != l)
      r.push_back(x);
  return r;
}

Lits with(Lits a, Lit l) {
  auto it = std::lower_bound(a.begin(), a.end(), l);
  if (it == a.end() || *it != l)
    a.insert(it, l);
  return a;
}

struct IC {
  ClauseKind kind = ClauseKind::Initial;
  Lits now, next;
  Lit ev = 0;
  uint64_t snow = 0, snext = 0;

  void seal() {
    std::sort(now.begin(), now.end());
    now.erase(std::unique(now.begin(), now.end()), now.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    snow = signature(now);
    snext = signature(next);
  }
  bool g0() const { return kind == ClauseKind::Global && next.empty(); }
  bool g1() const { return kind == ClauseKind::Global && !next.empty(); }
  bool empty() const { return kind != ClauseKind::Eventuality && now.empty() && next.empty(); }
  bool tautology() const { return has_complement(now) || has_complement(next); }
  std::string key() const {
    std::string k;
    k.reserve(4 * (now.size() + next.size()) + 8);
    k.push_back(static_cast<char>(kind));
    auto put = [&](Lit l) { k.append(reinterpret_cast<const char *>(&l), sizeof l); };
    for (Lit l : now) put(l);
    k.push_back('|');
    for (Lit l : next) put(l);
    k.push_back('|');
    put(ev);
    return k;
  }
};

IC make(ClauseKind k, Lits now, Lits next = {}, Lit ev = 0) {
  IC c;
  c.kind = k;
  c.now = std::move(now);
  c.next = std::move(next);
  c.ev = ev;
  c.seal();
  return c;
}

struct EmptyFound {};

class Solver {
public:
  Solver(const SolveOptions &o) : opt_(o), t0_(std::chrono::steady_clock::now()) {
    if (o.precedence)
      prec_ = o.precedence;
    else if (o.ordered)
      prec_ = default_precedence;
  }

  SolveResult run(const std::vector<SnfClause> &input) {
    SolveResult res;
    parts_.emplace_back();
    try {
      res.verdict = main_loop(input);
    } catch (EmptyFound &) {
      res.verdict = Verdict::Unsat;
    }
    res.stats.clauses = log_.clauses.size();
    res.stats.main_clauses = parts_[0].members.size();
    res.stats.events = log_.events.size();
    res.stats.loop_searches = searches_;
    res.stats.loop_iterations = log_.partitions.size() - 1;
    res.stats.seconds = elapsed();
    res.log = std::move(log_);
    return res;
  }

private:
  struct Part {
    std::vector<uint32_t> members;
    size_t given = 0;
    std::unordered_map<std::string, uint32_t> index;
  };

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

  void tick() {
    if ((++ticks_ & 1023) == 0 && elapsed() > opt_.time_budget_s)
      throw ResourceLimit(ResourceLimit::Kind::Time,
                          "time budget of " + std::to_string(opt_.time_budget_s) +
                              " s exceeded");
  }

  Lit lit(const Literal &l) {
    auto [it, fresh] = var_.emplace(l.name, static_cast<uint32_t>(names_.size()));
    if (fresh)
      names_.push_back(l.name);
    return it->second * 2 + (l.positive ? 0 : 1);
  }

  Literal literal(Lit l) const { return {names_[l / 2], (l & 1u) == 0}; }

  Lits lits(const std::vector<Literal> &v) {
    Lits r;
    for (auto &l : v)
      r.push_back(lit(l));
    return r;
  }

  SnfClause external(const IC &c) const {
    SnfClause s;
    s.kind = c.kind;
    for (Lit l : c.now) s.now.push_back(literal(l));
    for (Lit l : c.next) s.next.push_back(literal(l));
    if (c.kind == ClauseKind::Eventuality)
      s.ev = literal(c.ev);
    s.normalize();
    return s;
  }

  // Subsumption; in the main partition a clause G(P) also covers X-parts.
  bool subsumes(const IC &a, const IC &b, bool main) const {
    if (a.kind == ClauseKind::Eventuality || b.kind == ClauseKind::Eventuality)
      return false;
    if (a.kind == ClauseKind::Initial)
      return b.kind == ClauseKind::Initial && subset(a.now, a.snow, b.now, b.snow);
    if (a.next.empty()) {
      if (b.kind == ClauseKind::Initial)
        return main && subset(a.now, a.snow, b.now, b.snow);
      if (subset(a.now, a.snow, b.now, b.snow))
        return true;
      return main && subset(a.now, a.snow, b.next, b.snext);
    }
    return b.kind == ClauseKind::Global &&
           subset(a.now, a.snow, b.now, b.snow) &&
           subset(a.next, a.snext, b.next, b.snext);
  }

  uint32_t create(uint32_t part, IC c, int64_t start) {
    if (log_.clauses.size() >= opt_.max_clauses)
      throw ResourceLimit(ResourceLimit::Kind::Clauses,
                          "clause cap of " + std::to_string(opt_.max_clauses) +
                              " exceeded");
    uint32_t id = static_cast<uint32_t>(ic_.size());
    log_.clauses.push_back({external(c), part, start});
    parts_[part].index.emplace(c.key(), id);
    parts_[part].members.push_back(id);
    ic_.push_back(std::move(c));
    deleted_.push_back(0);
    return id;
  }

  bool forward_subsumed(uint32_t part, const IC &c) {
    bool main = part == kMainPartition;
    for (uint32_t m : parts_[part].members)
      if (!deleted_[m] && subsumes(ic_[m], c, main))
        return true;
    return false;
  }

  void backward_subsume(uint32_t part, uint32_t id) {
    bool main = part == kMainPartition;
    const IC &c = ic_[id];
    for (uint32_t m : parts_[part].members)
      if (m != id && !deleted_[m] && subsumes(c, ic_[m], main))
        deleted_[m] = 1;
  }

  void event(Rule r, int64_t p1, int64_t p2, uint32_t concl, bool fresh) {
    log_.events.push_back({r, {p1, p2}, concl, fresh});
  }

  void found_empty(uint32_t part, uint32_t id) {
    if (part == kMainPartition && ic_[id].empty()) {
      log_.empty_clause = id;
      throw EmptyFound{};
    }
  }

  // Adds a conclusion subject to redundancy checks.
  void derive(uint32_t part, IC c, Rule r, int64_t p1, int64_t p2) {
    tick();
    if (c.tautology())
      return;
    auto it = parts_[part].index.find(c.key());
    if (it != parts_[part].index.end()) {
      if (opt_.log_duplicates)
        event(r, p1, p2, it->second, false);
      return;
    }
    if (forward_subsumed(part, c))
      return;
    uint32_t id = create(part, std::move(c), -1);
    event(r, p1, p2, id, true);
    backward_subsume(part, id);
    found_empty(part, id);
  }

  // Adds a conclusion that always becomes a vertex.
  uint32_t force(uint32_t part, IC c, Rule r, int64_t p1, int64_t p2) {
    tick();
    bool dead = forward_subsumed(part, c);
    uint32_t id = create(part, std::move(c), -1);
    event(r, p1, p2, id, true);
    if (dead)
      deleted_[id] = 1;
    else
      backward_subsume(part, id);
    return id;
  }

  bool eligible(Lit l, const Lits &part) const {
    if (!prec_)
      return true;
    int rl = rank_of(l);
    for (Lit x : part)
      if (rank_of(x) > rl)
        return false;
    return true;
  }

  int rank_of(Lit l) const {
    if (rank_.size() <= l)
      rank_.resize(l + 1, INT32_MIN);
    if (rank_[l] == INT32_MIN)
      rank_[l] = prec_(literal(l));
    return rank_[l];
  }

  // Literals l of A with ~l in B that may be resolved upon.
  std::vector<Lit> clashes(const Lits &A, const Lits &B) const {
    std::vector<Lit> out;
    for (Lit l : A)
      if (std::binary_search(B.begin(), B.end(), neg(l)) && eligible(l, A) &&
          eligible(neg(l), B))
        out.push_back(l);
    return out;
  }

  static int shape(const IC &c) {
    if (c.kind == ClauseKind::Initial) return 0;
    if (c.g0()) return 1;
    if (c.g1()) return 2;
    return 3;
  }

  void resolve(uint32_t part, uint32_t x, uint32_t y) {
    int kx = shape(ic_[x]), ky = shape(ic_[y]);
    if (part != kMainPartition) {
      if (kx == 2 && ky == 2)
        step_xx(part, x, y);
      return;
    }
    if (kx == 3 || ky == 3)
      return;
    if (kx > ky) {
      std::swap(x, y);
      std::swap(kx, ky);
    }
    if (kx == 2) {
      step_xx(part, x, y);
      return;
    }
    const bool nx = kx == 1 && ky == 2;
    if (kx == 0 && ky == 2)
      return;
    for (Lit l : clashes(ic_[x].now, nx ? ic_[y].next : ic_[y].now)) {
      if (deleted_[x] || deleted_[y])
        return;
      Lits p = without(ic_[x].now, l);
      if (nx) {
        derive(part, make(ClauseKind::Global, ic_[y].now, merge(p, without(ic_[y].next, neg(l)))),
               Rule::StepNX, x, y);
        continue;
      }
      Lits q = merge(p, without(ic_[y].now, neg(l)));
      if (kx == 0 && ky == 0)
        derive(part, make(ClauseKind::Initial, std::move(q)), Rule::InitII, x, y);
      else if (kx == 0)
        derive(part, make(ClauseKind::Initial, std::move(q)), Rule::InitIN, x, y);
      else
        derive(part, make(ClauseKind::Global, std::move(q)), Rule::StepNN, x, y);
    }
  }

  void step_xx(uint32_t part, uint32_t x, uint32_t y) {
    for (Lit l : clashes(ic_[x].next, ic_[y].next)) {
      if (deleted_[x] || deleted_[y])
        return;
      derive(part,
             make(ClauseKind::Global, merge(ic_[x].now, ic_[y].now),
                  merge(without(ic_[x].next, l), without(ic_[y].next, neg(l)))),
             Rule::StepXX, x, y);
    }
  }

  void saturate(uint32_t part) {
    Part &p = parts_[part];
    while (p.given < p.members.size()) {
      uint32_t g = p.members[p.given++];
      if (deleted_[g])
        continue;
      for (size_t k = 0; k + 1 < p.given; ++k) {
        uint32_t a = p.members[k];
        if (deleted_[a])
          continue;
        resolve(part, g, a);
        if (deleted_[g])
          break;
      }
    }
  }

  uint32_t new_partition(uint32_t search, uint32_t iteration, int64_t ev) {
    parts_.emplace_back();
    log_.partitions.push_back({search, iteration, ev, false});
    return static_cast<uint32_t>(parts_.size() - 1);
  }

  Lit waits_for(Lit l) { return lit(Literal{waits_for_name(literal(l)), true}); }

  void augment() {
    std::vector<uint32_t> evs;
    for (uint32_t m : parts_[0].members)
      if (ic_[m].kind == ClauseKind::Eventuality)
        evs.push_back(m);
    std::vector<Lit> done;
    for (uint32_t e : evs) {
      Lit l = ic_[e].ev;
      Lit w = waits_for(l);
      force(0, make(ClauseKind::Global, with(with(ic_[e].now, l), w)), Rule::Aug1, e,
            kNoClause);
      if (std::find(done.begin(), done.end(), l) == done.end()) {
        done.push_back(l);
        force(0, make(ClauseKind::Global, {neg(w)}, with({l}, w)), Rule::Aug2, kNoClause,
              kNoClause);
      }
    }
    for (uint32_t id : parts_[0].members)
      if (ic_[id].empty() && !deleted_[id]) {
        log_.empty_clause = id;
        throw EmptyFound{};
      }
  }

  void loop_search(uint32_t ev) {
    ++searches_;
    const Lit l = ic_[ev].ev;
    std::vector<Lits> prev{Lits{}};
    std::vector<int64_t> prev_ids{kNoClause};
    for (uint32_t iter = 1;; ++iter) {
      if (iter > opt_.max_loop_iterations)
        throw ResourceLimit(ResourceLimit::Kind::Iterations,
                            "loop search iteration cap exceeded");
      uint32_t part = new_partition(static_cast<uint32_t>(searches_), iter, ev);
      std::vector<uint32_t> main_members = parts_[0].members;
      for (uint32_t m : main_members) {
        if (deleted_[m] || ic_[m].kind != ClauseKind::Global)
          continue;
        if (!ic_[m].next.empty())
          force(part, ic_[m], Rule::LoopInitX, m, kNoClause);
        else
          force(part, make(ClauseKind::Global, {}, ic_[m].now), Rule::LoopInitN, m,
                kNoClause);
      }
      std::vector<uint32_t> initc;
      for (size_t j = 0; j < prev.size(); ++j)
        initc.push_back(force(part, make(ClauseKind::Global, {}, with(prev[j], l)),
                              Rule::LoopInitC, prev_ids[j], ev));
      saturate(part);

      std::vector<uint32_t> cnew;
      for (uint32_t m : parts_[part].members)
        if (!deleted_[m] && ic_[m].g0())
          cnew.push_back(m);
      bool found = true;
      for (size_t j = 0; j < prev.size(); ++j) {
        bool sub = false;
        uint64_t sp = signature(prev[j]);
        for (uint32_t c : cnew)
          if (subset(ic_[c].now, ic_[c].snow, prev[j], sp)) {
            event(Rule::LoopSub, c, kNoClause, initc[j], false);
            sub = true;
            break;
          }
        found = found && sub;
      }
      if (found) {
        log_.partitions[part].found = true;
        Lit w = waits_for(l);
        for (uint32_t c : cnew) {
          derive(0, make(ClauseKind::Global, with(merge(ic_[c].now, ic_[ev].now), l)),
                 Rule::LoopConc1, c, ev);
          derive(0, make(ClauseKind::Global, {neg(w)}, with(ic_[c].now, l)), Rule::LoopConc2,
                 c, kNoClause);
        }
        saturate(0);
        return;
      }
      if (cnew.empty())
        return;
      prev.clear();
      prev_ids.clear();
      for (uint32_t c : cnew) {
        prev.push_back(ic_[c].now);
        prev_ids.push_back(c);
      }
    }
  }

  Verdict main_loop(const std::vector<SnfClause> &input) {
    for (size_t i = 0; i < input.size(); ++i) {
      const SnfClause &s = input[i];
      Lits now = lits(s.now);
      Lits next = lits(s.next);
      IC c = make(s.kind, std::move(now), std::move(next));
      if (s.kind == ClauseKind::Eventuality)
        c.ev = lit(*s.ev);
      c.seal();
      auto it = parts_[0].index.find(c.key());
      bool dup = it != parts_[0].index.end();
      bool dead = dup || forward_subsumed(0, c);
      uint32_t id = create(0, std::move(c), static_cast<int64_t>(i));
      if (dead)
        deleted_[id] = 1;
      else
        backward_subsume(0, id);
    }
    for (uint32_t id : parts_[0].members)
      if (ic_[id].empty()) {
        log_.empty_clause = id;
        return Verdict::Unsat;
      }
    saturate(0);
    augment();
    saturate(0);
    std::vector<uint32_t> evs;
    for (uint32_t m : parts_[0].members)
      if (ic_[m].kind == ClauseKind::Eventuality)
        evs.push_back(m);
    for (;;) {
      size_t before = parts_[0].members.size();
      for (uint32_t e : evs)
        loop_search(e);
      if (parts_[0].members.size() == before)
        return Verdict::Sat;
    }
  }

  const SolveOptions &opt_;
  std::function<int(const Literal &)> prec_;
  std::chrono::steady_clock::time_point t0_;
  uint64_t ticks_ = 0;
  size_t searches_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, uint32_t> var_;
  std::vector<IC> ic_;
  std::vector<char> deleted_;
  std::vector<Part> parts_;
  mutable std::vector<int> rank_;
  ProofLog log_;
};

// Schema checks over external clauses.
bool contains_lit(const std::vector<Literal> &v, const Literal &l) {
  return std::find(v.begin(), v.end(), l) != v.end();
}

std::vector<Literal> minus(std::vector<Literal> v, const Literal &l) {
  v.erase(std::remove(v.begin(), v.end(), l), v.end());
  return v;
}

std::vector<Literal> plus(std::vector<Literal> a, const std::vector<Literal> &b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

bool resolvent(const std::vector<Literal> &a, const std::vector<Literal> &b,
               const std::function<bool(const Literal &)> &check) {
  for (auto &l : a)
    if (contains_lit(b, l.negated()) && check(l))
      return true;
  return false;
}

} // namespace

SolveResult solve(const std::vector<SnfClause> &clauses, const SolveOptions &opts) {
  return Solver(opts).run(clauses);
}

std::string check_log(const ProofLog &log) {
  auto C = [&](int64_t id) -> const SnfClause & { return log.clauses.at(id).clause; };
  for (size_t i = 0; i < log.events.size(); ++i) {
    const ProofEvent &e = log.events[i];
    const SnfClause &c = C(e.conclusion);
    auto bad = [&](const std::string &why) {
      return "event " + std::to_string(i) + " (" + rule_name(e.rule) + "): " + why;
    };
    for (int64_t p : e.premises)
      if (p != kNoClause && (p < 0 || static_cast<size_t>(p) >= log.clauses.size()))
        return bad("premise out of range");
    if (e.new_vertex && e.rule != Rule::LoopSub) {
      for (int64_t p : e.premises)
        if (p != kNoClause && p >= static_cast<int64_t>(e.conclusion))
          return bad("premise does not precede conclusion");
    }
    bool ok = true;
    const int64_t p1 = e.premises[0], p2 = e.premises[1];
    switch (e.rule) {
    case Rule::InitII:
    case Rule::InitIN:
    case Rule::StepNN: {
      const auto &a = C(p1), &b = C(p2);
      ok = resolvent(a.now, b.now, [&](const Literal &l) {
        return plus(minus(a.now, l), minus(b.now, l.negated())) == c.now && c.next.empty();
      });
      break;
    }
    case Rule::StepNX: {
      const auto &a = C(p1), &b = C(p2);
      ok = resolvent(a.now, b.next, [&](const Literal &l) {
        return c.now == b.now && plus(minus(a.now, l), minus(b.next, l.negated())) == c.next;
      });
      break;
    }
    case Rule::StepXX: {
      const auto &a = C(p1), &b = C(p2);
      ok = resolvent(a.next, b.next, [&](const Literal &l) {
        return c.now == plus(a.now, b.now) &&
               plus(minus(a.next, l), minus(b.next, l.negated())) == c.next;
      });
      break;
    }
    case Rule::Aug1: {
      const auto &a = C(p1);
      Literal w{waits_for_name(*a.ev), true};
      ok = c.now == plus(a.now, {*a.ev, w}) && c.next.empty();
      break;
    }
    case Rule::Aug2:
      ok = c.now.size() == 1 && !c.now[0].positive && c.next.size() == 2;
      break;
    case Rule::LoopInitX:
      ok = C(p1).kind == ClauseKind::Global && C(p1).now == c.now && C(p1).next == c.next;
      break;
    case Rule::LoopInitN:
      ok = c.now.empty() && C(p1).now == c.next && C(p1).next.empty();
      break;
    case Rule::LoopInitC: {
      const auto &ev = C(p2);
      std::vector<Literal> P = p1 == kNoClause ? std::vector<Literal>{} : C(p1).now;
      ok = c.now.empty() && c.next == plus(P, {*ev.ev});
      break;
    }
    case Rule::LoopSub: {
      const auto &a = C(p1);
      ok = a.next.empty() && std::includes(c.next.begin(), c.next.end(), a.now.begin(),
                                           a.now.end());
      break;
    }
    case Rule::LoopConc1: {
      const auto &a = C(p1), &ev = C(p2);
      ok = c.now == plus(plus(a.now, ev.now), {*ev.ev}) && c.next.empty();
      break;
    }
    case Rule::LoopConc2: {
      const auto &a = C(p1);
      ok = c.now.size() == 1 && !c.now[0].positive &&
           std::includes(c.next.begin(), c.next.end(), a.now.begin(), a.now.end()) &&
           c.next.size() <= a.now.size() + 1;
      break;
    }
    }
    if (!ok)
      return bad("conclusion " + c.str() + " does not match schema");
  }
  return {};
}

} // namespace trc
