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

#ifndef CONTROVERSY_BASELINES_HPP_
#define CONTROVERSY_BASELINES_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "controversy/graph.hpp"
#include "controversy/partition.hpp"

namespace controversy {

struct RwcConfig {
  std::size_t k = 10;         // absorbing influencers per side
  std::size_t repeats = 100;  // walks per non-absorbing start node
  std::uint64_t seed = 0;
  unsigned threads = 1;
  // Walks (restarts included) longer than this are abandoned uncounted.
  std::uint32_t max_steps = 100000;
};

struct RwcResult {
  double score = 0.0;
  // p[a][b] = P(start on side a | absorbed on side b).
  std::array<std::array<double, 2>, 2> p{};
  // counts[a][b] = walks started on a and absorbed on b.
  std::array<std::array<std::uint64_t, 2>, 2> counts{};
  std::uint64_t abandoned = 0;
  std::array<std::vector<NodeId>, 2> influencers;
};

// Top-k in-degree nodes per side, ties to the smaller id.
std::array<std::vector<NodeId>, 2> TopInDegree(const Graph& g,
                                               const Partition& p,
                                               std::size_t k);

// Random-walk controversy P_XX * P_YY - P_YX * P_XY, estimated by absorbing
// walks along out-edges from every non-influencer. A walk at a node without
// out-edges restarts from its start node. A conditional probability whose
// side absorbed no walk at all is taken as 0.
RwcResult RandomWalkControversy(const Graph& g, const Partition& p,
                                const RwcConfig& config);

// Boundary polarity: mean over boundary nodes of
//   d_i / (d_b + d_i) - 0.5
// with d_b the cross-side edges and d_i the edges to non-boundary nodes of
// the own side (undirected counts).
double GuerraPolarity(const Graph& g, const Partition& p);

}  // namespace controversy

#endif  // CONTROVERSY_BASELINES_HPP_
