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

#include "trc/engine.hpp"

#include <string>
#include <vector>

namespace trc {

struct RuleMeta {
  bool edge1;
  uint8_t ts1;
  bool edge2;
  uint8_t ts2;
  bool vertex;
};
const RuleMeta &rule_meta(Rule r);

struct Edge {
  uint32_t from; // premise
  uint32_t to;   // conclusion
  uint8_t ts;
  bool operator==(const Edge &) const = default;
};

struct ResolutionGraph {
  std::vector<ClauseEntry> vertices;
  std::vector<Edge> edges;
  std::vector<PartitionInfo> partitions;
  int64_t empty_vertex = kNoClause;
  size_t starting = 0;
};

struct Subgraph {
  std::vector<char> member; // indexed by vertex id
  std::vector<uint32_t> vertices;
  std::vector<Edge> edges;
  uint32_t root = 0;
};

class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

ResolutionGraph build_graph(const ProofLog &log, size_t starting);
Subgraph backward_subgraph(const ResolutionGraph &g);
// Positions (in the starting clause list) of the UC members, ascending.
std::vector<size_t> uc_snf(const ResolutionGraph &g, const Subgraph &sub);

std::string partition_label(const ResolutionGraph &g, uint32_t part);
std::string to_dot(const ResolutionGraph &g, const Subgraph *sub = nullptr);

} // namespace trc
