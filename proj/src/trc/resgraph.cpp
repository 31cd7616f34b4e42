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

#include "trc/resgraph.hpp"

#include <algorithm>
#include <set>

namespace trc {

const RuleMeta &rule_meta(Rule r) {
  static const RuleMeta table[kRuleCount] = {
      {true, 0, true, 0, true},   // init-ii
      {true, 0, true, 0, true},   // init-in
      {true, 0, true, 0, true},   // step-nn
      {true, 1, true, 0, true},   // step-nx
      {true, 0, true, 0, true},   // step-xx
      {true, 0, false, 0, true},  // aug1
      {false, 0, false, 0, true}, // aug2
      {true, 0, false, 0, true},  // loop-it-init-x
      {true, 1, false, 0, true},  // loop-it-init-n
      {false, 0, false, 0, true}, // loop-it-init-c
      {true, 1, false, 0, false}, // loop-it-sub
      {true, 0, true, 0, true},   // loop-conclusion1
      {true, 1, false, 0, true},  // loop-conclusion2
  };
  return table[static_cast<int>(r)];
}

ResolutionGraph build_graph(const ProofLog &log, size_t starting) {
  ResolutionGraph g;
  g.vertices = log.clauses;
  g.partitions = log.partitions;
  g.empty_vertex = log.empty_clause;
  g.starting = starting;
  std::set<std::tuple<uint32_t, uint32_t, uint8_t>> seen;
  auto add = [&](int64_t p, uint32_t c, uint8_t ts) {
    if (p == kNoClause)
      throw GraphError("edge from missing premise");
    if (static_cast<size_t>(p) >= g.vertices.size())
      throw GraphError("premise id out of range");
    if (seen.emplace(static_cast<uint32_t>(p), c, ts).second)
      g.edges.push_back({static_cast<uint32_t>(p), c, ts});
  };
  for (auto &e : log.events) {
    const RuleMeta &m = rule_meta(e.rule);
    if (e.conclusion >= g.vertices.size())
      throw GraphError("conclusion id out of range");
    if (m.vertex != e.new_vertex && e.rule == Rule::LoopSub)
      throw GraphError("loop-it-sub must not create a vertex");
    if (m.edge1)
      add(e.premises[0], e.conclusion, m.ts1);
    if (m.edge2)
      add(e.premises[1], e.conclusion, m.ts2);
  }
  return g;
}

Subgraph backward_subgraph(const ResolutionGraph &g) {
  if (g.empty_vertex == kNoClause)
    throw GraphError("no empty clause in the main partition");
  Subgraph s;
  s.root = static_cast<uint32_t>(g.empty_vertex);
  std::vector<std::vector<uint32_t>> in(g.vertices.size());
  for (uint32_t i = 0; i < g.edges.size(); ++i)
    in[g.edges[i].to].push_back(i);
  s.member.assign(g.vertices.size(), 0);
  std::vector<uint32_t> stack{s.root};
  s.member[s.root] = 1;
  std::vector<char> edge_in(g.edges.size(), 0);
  while (!stack.empty()) {
    uint32_t v = stack.back();
    stack.pop_back();
    for (uint32_t ei : in[v]) {
      edge_in[ei] = 1;
      uint32_t u = g.edges[ei].from;
      if (!s.member[u]) {
        s.member[u] = 1;
        stack.push_back(u);
      }
    }
  }
  for (uint32_t v = 0; v < g.vertices.size(); ++v)
    if (s.member[v])
      s.vertices.push_back(v);
  for (uint32_t i = 0; i < g.edges.size(); ++i)
    if (edge_in[i])
      s.edges.push_back(g.edges[i]);
  return s;
}

std::vector<size_t> uc_snf(const ResolutionGraph &g, const Subgraph &sub) {
  std::set<size_t> out;
  for (uint32_t v : sub.vertices) {
    const ClauseEntry &e = g.vertices[v];
    if (e.partition == kMainPartition && e.start_index >= 0)
      out.insert(static_cast<size_t>(e.start_index));
  }
  return {out.begin(), out.end()};
}

std::string partition_label(const ResolutionGraph &g, uint32_t part) {
  if (part == kMainPartition)
    return "M";
  const PartitionInfo &p = g.partitions[part];
  return "L" + std::to_string(p.search) + "." + std::to_string(p.iteration);
}

namespace {
std::string escape(const std::string &s) {
  std::string o;
  for (char c : s) {
    if (c == '"' || c == '\\')
      o += '\\';
    o += c;
  }
  return o;
}
} // namespace

std::string to_dot(const ResolutionGraph &g, const Subgraph *sub) {
  std::string out = "digraph resolution {\n  node [shape=box, fontname=\"monospace\"];\n";
  auto keep = [&](uint32_t v) { return !sub || sub->member[v]; };
  for (uint32_t v = 0; v < g.vertices.size(); ++v) {
    if (!keep(v))
      continue;
    const ClauseEntry &e = g.vertices[v];
    out += "  n" + std::to_string(v) + " [label=\"" + escape(e.clause.str()) +
           "\\n" + partition_label(g, e.partition) + "\"";
    if (static_cast<int64_t>(v) == g.empty_vertex)
      out += ", style=bold";
    else if (e.start_index >= 0)
      out += ", style=filled, fillcolor=lightgrey";
    out += "];\n";
  }
  const std::vector<Edge> &edges = sub ? sub->edges : g.edges;
  for (auto &e : edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
           " [ts=" + std::to_string(e.ts);
    if (e.ts == 1)
      out += ", color=red, style=dashed";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

} // namespace trc
