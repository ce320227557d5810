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

#include "controversy/topology.hpp"

#include <algorithm>
#include <deque>

namespace controversy {

BoundarySets BoundaryNodes(const Graph& g, const Partition& p) {
  BoundarySets out;
  out.is_boundary.assign(g.node_count(), false);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (!p.same_side(u, v)) {
        out.is_boundary[u] = true;
        break;
      }
    }
    if (out.is_boundary[u]) out.nodes[Index(p.side(u))].push_back(u);
  }
  return out;
}

LevelMap AssignLevels(const Graph& g, const Partition& p) {
  const std::size_t n = g.node_count();
  const BoundarySets boundary = BoundaryNodes(g, p);
  LevelMap map;
  map.level.assign(n, -1);

  std::deque<NodeId> queue;
  for (Side side : {Side::kX, Side::kY}) {
    const auto& sources = boundary.of(side);
    if (sources.empty()) {
      map.isolated_community[Index(side)] = true;
      for (NodeId u = 0; u < n; ++u) {
        if (p.side(u) == side) map.level[u] = 0;
      }
      map.max_level[Index(side)] = 0;
      continue;
    }
    for (NodeId s : sources) {
      map.level[s] = 0;
      queue.push_back(s);
    }
    int deepest = 0;
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      deepest = std::max(deepest, map.level[u]);
      for (NodeId v : g.neighbors(u)) {
        if (p.side(v) == side && map.level[v] < 0) {
          map.level[v] = map.level[u] + 1;
          queue.push_back(v);
        }
      }
    }
    bool any_unreachable = false;
    for (NodeId u = 0; u < n; ++u) {
      if (p.side(u) == side && map.level[u] < 0) {
        map.level[u] = deepest + 1;
        ++map.unreachable_count;
        any_unreachable = true;
      }
    }
    map.max_level[Index(side)] = any_unreachable ? deepest + 1 : deepest;
  }
  return map;
}

int MaxLevel(const LevelMap& levels, Side side) { return levels.max(side); }

EdgeSplit SplitEdges(const Graph& g, const Partition& p, NodeId u) {
  EdgeSplit split;
  for (NodeId v : g.neighbors(u)) {
    if (p.same_side(u, v)) {
      ++split.internal;
    } else {
      ++split.cross;
    }
  }
  return split;
}

double NodeConductance(const Graph& g, const Partition& p, NodeId u) {
  const EdgeSplit split = SplitEdges(g, p, u);
  return static_cast<double>(split.cross) /
         static_cast<double>(std::max<std::size_t>(1, split.internal));
}

std::vector<double> NodeConductances(const Graph& g, const Partition& p) {
  std::vector<double> out(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) out[u] = NodeConductance(g, p, u);
  return out;
}

}  // namespace controversy
