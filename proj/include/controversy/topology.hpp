// Copyright 2026 The controversy-lab Authors.
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

#ifndef CONTROVERSY_TOPOLOGY_HPP_
#define CONTROVERSY_TOPOLOGY_HPP_

#include <array>
#include <vector>

#include "controversy/graph.hpp"
#include "controversy/partition.hpp"

namespace controversy {

// Nodes with at least one undirected edge to the opposite side.
struct BoundarySets {
  std::array<std::vector<NodeId>, 2> nodes;  // indexed by Side, ascending ids
  std::vector<bool> is_boundary;

  const std::vector<NodeId>& of(Side s) const { return nodes[Index(s)]; }
  std::size_t total() const { return nodes[0].size() + nodes[1].size(); }
};

BoundarySets BoundaryNodes(const Graph& g, const Partition& p);

// Per-node depth below its community's boundary.
//
// A node's level is its undirected hop distance, walking only through its own
// community, to the nearest boundary node of that community. Nodes that
// cannot reach the boundary sit one level below the deepest reachable one.
// A community without any boundary node has every member at level 0 and is
// flagged as isolated.
struct LevelMap {
  std::vector<int> level;
  std::array<int, 2> max_level{0, 0};
  std::array<bool, 2> isolated_community{false, false};
  std::size_t unreachable_count = 0;

  int max(Side s) const { return max_level[Index(s)]; }
};

LevelMap AssignLevels(const Graph& g, const Partition& p);

int MaxLevel(const LevelMap& levels, Side side);

struct EdgeSplit {
  std::size_t cross = 0;     // undirected edges to the other side
  std::size_t internal = 0;  // undirected edges within the own side
};

EdgeSplit SplitEdges(const Graph& g, const Partition& p, NodeId u);

// cross / max(1, internal). Zero for every non-boundary node; the guard
// keeps a boundary node without internal edges finite.
double NodeConductance(const Graph& g, const Partition& p, NodeId u);
std::vector<double> NodeConductances(const Graph& g, const Partition& p);

}  // namespace controversy

#endif  // CONTROVERSY_TOPOLOGY_HPP_
