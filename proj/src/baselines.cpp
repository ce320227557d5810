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

#include "controversy/baselines.hpp"

#include <algorithm>
#include <numeric>

#include "controversy/error.hpp"
#include "controversy/parallel.hpp"
#include "controversy/random.hpp"
#include "controversy/topology.hpp"

namespace controversy {

std::array<std::vector<NodeId>, 2> TopInDegree(const Graph& g,
                                               const Partition& p,
                                               std::size_t k) {
  std::array<std::vector<NodeId>, 2> out;
  for (Side side : {Side::kX, Side::kY}) {
    std::vector<NodeId> members;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (p.side(u) == side) members.push_back(u);
    }
    if (members.size() < k) {
      throw DataError("rwc: side " + std::string(side == Side::kX ? "X" : "Y") +
                      " has " + std::to_string(members.size()) +
                      " nodes, fewer than k=" + std::to_string(k));
    }
    std::stable_sort(members.begin(), members.end(), [&](NodeId a, NodeId b) {
      return g.in_degree(a) > g.in_degree(b);
    });
    members.resize(k);
    std::sort(members.begin(), members.end());
    out[Index(side)] = std::move(members);
  }
  return out;
}

RwcResult RandomWalkControversy(const Graph& g, const Partition& p,
                                const RwcConfig& config) {
  if (config.k < 1 || config.repeats < 1) {
    throw InvalidArgument("rwc: k and repeats must be >= 1");
  }
  RwcResult result;
  result.influencers = TopInDegree(g, p, config.k);
  const std::size_t n = g.node_count();
  std::vector<bool> absorbing(n, false);
  for (const auto& side : result.influencers) {
    for (NodeId u : side) absorbing[u] = true;
  }
  std::vector<NodeId> starts;
  for (NodeId u = 0; u < n; ++u) {
    if (!absorbing[u]) starts.push_back(u);
  }

  // Per start node: absorbed-on-X, absorbed-on-Y, abandoned.
  std::vector<std::array<std::uint64_t, 3>> tallies(starts.size());
  ParallelFor(starts.size(), config.threads, [&](std::size_t i) {
    const NodeId start = starts[i];
    auto& tally = tallies[i];
    tally = {0, 0, 0};
    for (std::size_t r = 0; r < config.repeats; ++r) {
      Rng rng(DeriveSeed(config.seed, start, r));
      NodeId current = start;
      bool absorbed = false;
      for (std::uint32_t step = 0; step < config.max_steps; ++step) {
        auto out = g.out_neighbors(current);
        current = out.empty() ? start : out[rng.Below(out.size())];
        if (absorbing[current]) {
          absorbed = true;
          break;
        }
      }
      if (absorbed) {
        ++tally[Index(p.side(current))];
      } else {
        ++tally[2];
      }
    }
  });

  for (std::size_t i = 0; i < starts.size(); ++i) {
    const int from = Index(p.side(starts[i]));
    result.counts[from][0] += tallies[i][0];
    result.counts[from][1] += tallies[i][1];
    result.abandoned += tallies[i][2];
  }
  for (int end = 0; end < 2; ++end) {
    const std::uint64_t ended = result.counts[0][end] + result.counts[1][end];
    for (int start = 0; start < 2; ++start) {
      result.p[start][end] =
          ended == 0 ? 0.0
                     : static_cast<double>(result.counts[start][end]) /
                           static_cast<double>(ended);
    }
  }
  result.score = result.p[0][0] * result.p[1][1] - result.p[1][0] * result.p[0][1];
  return result;
}

double GuerraPolarity(const Graph& g, const Partition& p) {
  const BoundarySets boundary = BoundaryNodes(g, p);
  if (boundary.total() == 0) {
    throw DataError("guerra polarity undefined: no cross edges");
  }
  double sum = 0.0;
  for (const auto& side : boundary.nodes) {
    for (NodeId v : side) {
      std::size_t d_i = 0, d_b = 0;
      for (NodeId w : g.neighbors(v)) {
        if (!p.same_side(v, w)) {
          ++d_b;
        } else if (!boundary.is_boundary[w]) {
          ++d_i;
        }
      }
      sum += static_cast<double>(d_i) / static_cast<double>(d_b + d_i) - 0.5;
    }
  }
  return sum / static_cast<double>(boundary.total());
}

}  // namespace controversy
