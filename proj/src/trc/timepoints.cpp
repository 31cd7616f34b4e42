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

#include "trc/timepoints.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace trc {

UnaryNfa to_unary_nfa(const Subgraph &sub) {
  std::unordered_map<uint32_t, uint32_t> idx;
  for (uint32_t i = 0; i < sub.vertices.size(); ++i)
    idx[sub.vertices[i]] = i;
  UnaryNfa n;
  n.states = static_cast<uint32_t>(sub.vertices.size());
  n.initial = {idx.at(sub.root)};
  for (auto &e : sub.edges) {
    auto t = std::make_pair(idx.at(e.to), idx.at(e.from));
    (e.ts ? n.ones : n.eps).push_back(t);
  }
  std::sort(n.ones.begin(), n.ones.end());
  n.ones.erase(std::unique(n.ones.begin(), n.ones.end()), n.ones.end());
  std::sort(n.eps.begin(), n.eps.end());
  n.eps.erase(std::unique(n.eps.begin(), n.eps.end()), n.eps.end());
  return n;
}

namespace {

std::vector<std::vector<uint32_t>> adjacency(uint32_t n,
                                             const std::vector<std::pair<uint32_t, uint32_t>> &es) {
  std::vector<std::vector<uint32_t>> adj(n);
  for (auto &[a, b] : es)
    adj[a].push_back(b);
  return adj;
}

std::vector<uint32_t> closure(const std::vector<std::vector<uint32_t>> &eps,
                              uint32_t s) {
  std::vector<char> seen(eps.size(), 0);
  std::vector<uint32_t> st{s}, out;
  seen[s] = 1;
  while (!st.empty()) {
    uint32_t v = st.back();
    st.pop_back();
    out.push_back(v);
    for (uint32_t w : eps[v])
      if (!seen[w]) {
        seen[w] = 1;
        st.push_back(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

UnaryNfa epsilon_free(const UnaryNfa &n) {
  if (n.eps.empty())
    return n;
  auto eps = adjacency(n.states, n.eps);
  auto ones = adjacency(n.states, n.ones);
  std::vector<std::vector<uint32_t>> cl(n.states);
  for (uint32_t s = 0; s < n.states; ++s)
    cl[s] = closure(eps, s);
  UnaryNfa r;
  r.states = n.states;
  std::vector<char> init(n.states, 0);
  for (uint32_t s : n.initial)
    for (uint32_t t : cl[s])
      init[t] = 1;
  for (uint32_t s = 0; s < n.states; ++s)
    if (init[s])
      r.initial.push_back(s);
  // ε* 1 ε*
  for (uint32_t s = 0; s < n.states; ++s) {
    std::vector<char> tgt(n.states, 0);
    for (uint32_t a : cl[s])
      for (uint32_t b : ones[a])
        for (uint32_t c : cl[b])
          tgt[c] = 1;
    for (uint32_t t = 0; t < n.states; ++t)
      if (tgt[t])
        r.ones.emplace_back(s, t);
  }
  return r;
}

namespace {

class Bits {
public:
  explicit Bits(uint32_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(uint32_t i) { w_[i / 64] |= uint64_t{1} << (i % 64); }
  bool get(uint32_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
  void merge(const Bits &o) {
    for (size_t i = 0; i < w_.size(); ++i)
      w_[i] |= o.w_[i];
  }
  bool any() const {
    return std::any_of(w_.begin(), w_.end(), [](uint64_t x) { return x != 0; });
  }
  bool operator==(const Bits &o) const { return w_ == o.w_; }
  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (uint64_t x : w_)
      h = (h ^ x) * 1099511628211ull;
    return h;
  }

private:
  std::vector<uint64_t> w_;
};

struct Layers {
  uint32_t n;
  std::vector<Bits> succ;

  explicit Layers(const UnaryNfa &nfa) : n(nfa.states), succ(nfa.states, Bits(nfa.states)) {
    for (auto &[a, b] : nfa.ones)
      succ[a].set(b);
  }
  Bits start(const UnaryNfa &nfa) const {
    Bits b(n);
    for (uint32_t s : nfa.initial)
      b.set(s);
    return b;
  }
  Bits step(const Bits &f) const {
    Bits r(n);
    for (uint32_t s = 0; s < n; ++s)
      if (f.get(s))
        r.merge(succ[s]);
    return r;
  }
};

// Frontier iteration until the frontier sequence repeats.
std::vector<SemilinearSet> parikh_layered(const UnaryNfa &nfa) {
  Layers L(nfa);
  std::vector<Bits> seq{L.start(nfa)};
  std::unordered_multimap<size_t, uint32_t> seen;
  seen.emplace(seq[0].hash(), 0);
  uint64_t k0 = 0, k1 = 0;
  for (;;) {
    Bits nx = L.step(seq.back());
    uint64_t k = seq.size();
    bool hit = false;
    auto [b, e] = seen.equal_range(nx.hash());
    for (auto it = b; it != e; ++it)
      if (seq[it->second] == nx) {
        k0 = it->second;
        k1 = k;
        hit = true;
        break;
      }
    if (hit)
      break;
    if (k > 50'000'000ull / std::max<uint32_t>(1, nfa.states))
      throw SemilinearError("parikh: frontier sequence did not repeat within limit");
    seen.emplace(nx.hash(), static_cast<uint32_t>(k));
    seq.push_back(std::move(nx));
  }
  const uint64_t q = k1 - k0;
  std::vector<SemilinearSet> out(nfa.states);
  for (uint32_t s = 0; s < nfa.states; ++s) {
    std::vector<uint64_t> fin;
    std::vector<Progression> ps;
    for (uint64_t k = 0; k < k0; ++k)
      if (seq[k].get(s))
        fin.push_back(k);
    for (uint64_t k = k0; k < k1; ++k)
      if (seq[k].get(s))
        ps.push_back({k, q});
    out[s] = SemilinearSet::from_parts(std::move(fin), std::move(ps));
  }
  return out;
}

struct SccInfo {
  std::vector<uint32_t> comp; // state -> component id
  std::vector<std::vector<uint32_t>> members;
};

SccInfo tarjan(uint32_t n, const std::vector<std::vector<uint32_t>> &adj) {
  SccInfo r;
  r.comp.assign(n, UINT32_MAX);
  std::vector<uint32_t> index(n, UINT32_MAX), low(n, 0), stack;
  std::vector<char> on(n, 0);
  uint32_t counter = 0;
  struct Frame {
    uint32_t v;
    size_t i;
  };
  for (uint32_t root = 0; root < n; ++root) {
    if (index[root] != UINT32_MAX)
      continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on[root] = 1;
    while (!call.empty()) {
      Frame &f = call.back();
      if (f.i < adj[f.v].size()) {
        uint32_t w = adj[f.v][f.i++];
        if (index[w] == UINT32_MAX) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on[w] = 1;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      uint32_t v = f.v;
      if (low[v] == index[v]) {
        uint32_t id = static_cast<uint32_t>(r.members.size());
        r.members.emplace_back();
        uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on[w] = 0;
          r.comp[w] = id;
          r.members.back().push_back(w);
        } while (w != v);
      }
      call.pop_back();
      if (!call.empty())
        low[call.back().v] = std::min(low[call.back().v], low[v]);
    }
  }
  return r;
}

// Cycle-normal construction: every path longer than |states| passes through a
// cyclic component C, whose period d_C governs all long path lengths through
// it. Residues per (component, state) come from one BFS over state×residue;
// lengths below an explicit bound are read from frontier layers.
std::vector<SemilinearSet> parikh_scc(const UnaryNfa &nfa) {
  const uint32_t n = nfa.states;
  auto adj = adjacency(n, nfa.ones);
  std::vector<char> reach(n, 0);
  {
    std::vector<uint32_t> st(nfa.initial.begin(), nfa.initial.end());
    for (uint32_t s : st)
      reach[s] = 1;
    while (!st.empty()) {
      uint32_t v = st.back();
      st.pop_back();
      for (uint32_t w : adj[v])
        if (!reach[w]) {
          reach[w] = 1;
          st.push_back(w);
        }
    }
  }
  SccInfo scc = tarjan(n, adj);

  struct Cyclic {
    uint32_t id;
    uint64_t period;
    uint64_t size;
    std::vector<std::vector<int64_t>> dist; // state x residue -> min length
  };
  std::vector<Cyclic> cyc;
  for (uint32_t c = 0; c < scc.members.size(); ++c) {
    const auto &mem = scc.members[c];
    if (!reach[mem[0]])
      continue;
    // BFS depths inside the component give the period as a gcd.
    std::unordered_map<uint32_t, int64_t> depth;
    std::vector<uint32_t> q{mem[0]};
    depth[mem[0]] = 0;
    for (size_t h = 0; h < q.size(); ++h)
      for (uint32_t w : adj[q[h]])
        if (scc.comp[w] == c && !depth.count(w)) {
          depth[w] = depth[q[h]] + 1;
          q.push_back(w);
        }
    uint64_t g = 0;
    bool cyclic = false;
    for (uint32_t v : mem)
      for (uint32_t w : adj[v])
        if (scc.comp[w] == c) {
          cyclic = true;
          int64_t diff = depth[v] + 1 - depth[w];
          g = std::gcd(g, static_cast<uint64_t>(diff < 0 ? -diff : diff));
        }
    if (!cyclic)
      continue;
    cyc.push_back({c, g, mem.size(), {}});
  }

  uint64_t bound = n;
  for (auto &C : cyc) {
    const uint64_t d = C.period;
    // BFS over (state, residue, touched C).
    std::vector<int64_t> dist(static_cast<size_t>(n) * d * 2, -1);
    auto at = [&](uint32_t s, uint64_t r, int t) -> int64_t & {
      return dist[(static_cast<size_t>(s) * d + r) * 2 + t];
    };
    std::vector<std::tuple<uint32_t, uint64_t, int>> q;
    for (uint32_t s : nfa.initial) {
      int t = scc.comp[s] == C.id;
      if (at(s, 0, t) < 0) {
        at(s, 0, t) = 0;
        q.emplace_back(s, 0, t);
      }
    }
    for (size_t h = 0; h < q.size(); ++h) {
      auto [s, r, t] = q[h];
      int64_t dd = at(s, r, t);
      for (uint32_t w : adj[s]) {
        int tw = t || scc.comp[w] == C.id;
        uint64_t rw = (r + 1) % d;
        if (at(w, rw, tw) < 0) {
          at(w, rw, tw) = dd + 1;
          q.emplace_back(w, rw, tw);
        }
      }
    }
    C.dist.assign(n, std::vector<int64_t>(d, -1));
    int64_t longest = 0;
    for (uint32_t s = 0; s < n; ++s)
      for (uint64_t r = 0; r < d; ++r) {
        C.dist[s][r] = at(s, r, 1);
        longest = std::max(longest, C.dist[s][r]);
      }
    // Closed walks of every length j·d exist at each vertex of C once
    // j exceeds the exponent bound of the primitive d-th power.
    uint64_t m = C.size >= d ? C.size - d : 0;
    uint64_t frob = d * (m * m + 1);
    bound = std::max(bound, static_cast<uint64_t>(longest) + frob + 1);
  }

  Layers L(nfa);
  std::vector<std::vector<uint64_t>> fin(n);
  Bits f = L.start(nfa);
  for (uint64_t k = 0; k < bound; ++k) {
    if (!f.any())
      break;
    for (uint32_t s = 0; s < n; ++s)
      if (f.get(s))
        fin[s].push_back(k);
    f = L.step(f);
  }

  std::vector<SemilinearSet> out(n);
  for (uint32_t s = 0; s < n; ++s) {
    std::vector<Progression> ps;
    for (auto &C : cyc)
      for (uint64_t r = 0; r < C.period; ++r)
        if (C.dist[s][r] >= 0) {
          uint64_t o = bound + (r + C.period - bound % C.period) % C.period;
          ps.push_back({o, C.period});
        }
    out[s] = SemilinearSet::from_parts(std::move(fin[s]), std::move(ps));
  }
  return out;
}

} // namespace

std::vector<SemilinearSet> parikh_all_states(const UnaryNfa &n,
                                             ParikhAlgorithm algo) {
  if (!n.epsilon_free())
    throw std::invalid_argument("parikh: NFA has epsilon transitions");
  return algo == ParikhAlgorithm::Scc ? parikh_scc(n) : parikh_layered(n);
}

std::string check_parikh_bounds(const UnaryNfa &n,
                                const std::vector<SemilinearSet> &sets) {
  const uint64_t N = n.states;
  for (uint32_t s = 0; s < sets.size(); ++s) {
    for (auto &p : sets[s].progressions())
      if (p.period > N)
        return "state " + std::to_string(s) + ": period " +
               std::to_string(p.period) + " exceeds " + std::to_string(N);
    if (sets[s].threshold() > 4 * N * N)
      return "state " + std::to_string(s) + ": threshold " +
             std::to_string(sets[s].threshold()) + " exceeds 4n^2";
  }
  return {};
}

VertexLabels label_vertices(const Subgraph &sub, ParikhAlgorithm algo) {
  UnaryNfa nfa = epsilon_free(to_unary_nfa(sub));
  auto sets = parikh_all_states(nfa, algo);
  if (auto v = check_parikh_bounds(nfa, sets); !v.empty())
    throw std::logic_error("parikh bound violated: " + v);
  VertexLabels out;
  for (uint32_t i = 0; i < sub.vertices.size(); ++i)
    out.emplace(sub.vertices[i], sets[i]);
  return out;
}

namespace {

AnnotatedFormula lit_node(const Literal &l, const SemilinearSet &I) {
  AnnotatedFormula p{Op::Prop, l.name, {}, {}};
  if (l.positive)
    return p;
  return {Op::Not, {}, {I}, {std::move(p)}};
}

AnnotatedFormula disj(const std::vector<Literal> &ls, const SemilinearSet &I) {
  if (ls.empty())
    return {Op::False, {}, {}, {}};
  AnnotatedFormula acc = lit_node(ls[0], I);
  for (size_t i = 1; i < ls.size(); ++i)
    acc = {Op::Or, {}, {I, I}, {std::move(acc), lit_node(ls[i], I)}};
  return acc;
}

} // namespace

AnnotatedFormula clause_with_timepoints(const SnfClause &c,
                                        const SemilinearSet &I) {
  if (I.is_empty())
    throw std::invalid_argument("clause_with_timepoints: empty set");
  switch (c.kind) {
  case ClauseKind::Initial:
    return disj(c.now, I);
  case ClauseKind::Global: {
    AnnotatedFormula body;
    if (c.next.empty()) {
      body = disj(c.now, I);
    } else {
      SemilinearSet I1 = I.shift(1);
      AnnotatedFormula x{Op::Next, {}, {I1}, {disj(c.next, I1)}};
      body = c.now.empty()
                 ? std::move(x)
                 : AnnotatedFormula{Op::Or, {}, {I, I}, {disj(c.now, I), std::move(x)}};
    }
    return {Op::Globally, {}, {I}, {std::move(body)}};
  }
  case ClauseKind::Eventuality: {
    SemilinearSet T = I.tail_from_min();
    AnnotatedFormula fl{Op::Finally, {}, {T}, {lit_node(*c.ev, T)}};
    AnnotatedFormula body =
        c.now.empty() ? std::move(fl)
                      : AnnotatedFormula{Op::Or, {}, {I, I}, {disj(c.now, I), std::move(fl)}};
    return {Op::Globally, {}, {I}, {std::move(body)}};
  }
  }
  return {};
}

namespace {

std::string render_lit(const Literal &l, const SemilinearSet &I) {
  return l.positive ? l.name : "~[" + I.str() + "]" + l.name;
}

std::string render_disj(const std::vector<Literal> &ls, const SemilinearSet &I) {
  std::string s;
  for (size_t i = 0; i < ls.size(); ++i) {
    if (i)
      s += " | ";
    s += render_lit(ls[i], I);
  }
  return s;
}

std::string render_unary(const std::string &op, const SemilinearSet &I,
                         const std::vector<Literal> &ls) {
  std::string s = op + "[" + I.str() + "]";
  if (ls.size() == 1)
    return s + " " + render_lit(ls[0], I);
  return s + "(" + render_disj(ls, I) + ")";
}

} // namespace

std::string render_clause(const SnfClause &c, const SemilinearSet &I) {
  switch (c.kind) {
  case ClauseKind::Initial:
    return c.now.empty() ? "false" : render_disj(c.now, I);
  case ClauseKind::Global: {
    std::string body = render_disj(c.now, I);
    if (!c.next.empty()) {
      if (!body.empty())
        body += " | ";
      body += render_unary("X", I.shift(1), c.next);
    }
    return "G[" + I.str() + "](" + (body.empty() ? "false" : body) + ")";
  }
  case ClauseKind::Eventuality: {
    std::string body = render_disj(c.now, I);
    if (!body.empty())
      body += " | ";
    body += render_unary("F", I.tail_from_min(), {*c.ev});
    return "G[" + I.str() + "](" + body + ")";
  }
  }
  return {};
}

std::vector<UcClause> uc_with_timepoints(const ResolutionGraph &g,
                                         const Subgraph &sub,
                                         const VertexLabels &labels) {
  std::map<size_t, UcClause> acc;
  for (uint32_t v : sub.vertices) {
    const ClauseEntry &e = g.vertices[v];
    if (e.partition != kMainPartition || e.start_index < 0)
      continue;
    size_t i = static_cast<size_t>(e.start_index);
    const SemilinearSet &lab = labels.at(v);
    auto it = acc.find(i);
    if (it == acc.end())
      acc.emplace(i, UcClause{i, e.clause, lab});
    else
      it->second.set = it->second.set.unite(lab);
  }
  std::vector<UcClause> out;
  for (auto &[i, u] : acc)
    out.push_back(std::move(u));
  return out;
}

AnnotatedFormula conjoin(const std::vector<UcClause> &uc) {
  if (uc.empty())
    return {Op::True, {}, {}, {}};
  const SemilinearSet zero = SemilinearSet::singleton(0);
  AnnotatedFormula acc = clause_with_timepoints(uc[0].clause, uc[0].set);
  for (size_t i = 1; i < uc.size(); ++i)
    acc = {Op::And, {}, {zero, zero},
           {std::move(acc), clause_with_timepoints(uc[i].clause, uc[i].set)}};
  return acc;
}

std::vector<std::string> check_lemmas(const ResolutionGraph &g,
                                      const Subgraph &sub,
                                      const VertexLabels &labels) {
  std::vector<std::string> bad;
  const SemilinearSet zero = SemilinearSet::singleton(0);
  for (uint32_t v : sub.vertices) {
    const auto &lab = labels.at(v);
    if (lab.is_empty())
      bad.push_back("vertex " + std::to_string(v) + " has an empty label");
    if (g.vertices[v].clause.kind == ClauseKind::Initial && !lab.equals(zero))
      bad.push_back("initial-clause vertex " + std::to_string(v) + " labeled " +
                    lab.str());
  }
  for (auto &e : sub.edges) {
    const auto &src = labels.at(e.from);
    const auto &dst = labels.at(e.to);
    if (!dst.shift(e.ts).subset_of(src))
      bad.push_back("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                    " ts=" + std::to_string(e.ts) + ": " + dst.str() +
                    " not within " + src.str());
  }
  return bad;
}

} // namespace trc
