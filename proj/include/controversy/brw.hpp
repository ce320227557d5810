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

#ifndef CONTROVERSY_BRW_HPP_
#define CONTROVERSY_BRW_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "controversy/energy.hpp"
#include "controversy/graph.hpp"
#include "controversy/partition.hpp"
#include "controversy/random.hpp"
#include "controversy/topology.hpp"

namespace controversy {

inline constexpr std::uint32_t kDefaultStepCap = 10000;

enum class Termination : std::uint8_t { kEnergyExhausted, kDeadEnd, kStepCap };

std::string_view ToString(Termination t);

// Outcome of one energy-bounded walk.
struct WalkRecord {
  NodeId start = 0;
  bool crossed = false;
  int deepest_opposite_level = -1;  // -1 when the walk never crossed
  std::uint32_t steps = 0;
  Termination terminated_by = Termination::kEnergyExhausted;

  friend bool operator==(const WalkRecord&, const WalkRecord&) = default;
};

// Immutable view of everything a walk needs, plus the (side, level) groups
// used to re-seat a walk stuck on a node without out-edges.
class WalkEngine {
 public:
  WalkEngine(const Graph& g, const Partition& p, const LevelMap& levels,
             const EnergyAssignment& energy,
             std::uint32_t step_cap = kDefaultStepCap);

  // Starts with initial[start]; each step moves to a uniform out-neighbor
  // (or, at a node without out-edges, to a uniform other node of the same
  // side and level), debits loss[next] and records the deepest level seen
  // on the side opposite to the start. Stops when the energy is no longer
  // positive, at the step cap, or when a dangling node has no peers.
  WalkRecord Run(NodeId start, Rng& rng) const;

 private:
  const Graph& g_;
  const Partition& p_;
  const LevelMap& levels_;
  const EnergyAssignment& energy_;
  std::uint32_t step_cap_;
  // Node ids grouped by (side, level); group_of_ and pos_in_group_ locate a
  // node inside its group.
  std::vector<std::vector<NodeId>> groups_;
  std::vector<std::uint32_t> group_of_;
  std::vector<std::uint32_t> pos_in_group_;
};

WalkRecord RunWalk(const Graph& g, const Partition& p, const LevelMap& levels,
                   const EnergyAssignment& energy, NodeId start, Rng& rng,
                   std::uint32_t step_cap = kDefaultStepCap);

struct SimulationOptions {
  std::size_t walks_per_node = 50;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint32_t step_cap = kDefaultStepCap;
};

// n * walks_per_node records, node-major. Walk (u, r) draws from the stream
// DeriveSeed(seed, u, r), so the result does not depend on `threads`.
std::vector<WalkRecord> Simulate(const Graph& g, const Partition& p,
                                 const LevelMap& levels,
                                 const EnergyAssignment& energy,
                                 const SimulationOptions& options);

// 0 for a confined walk, else (1 + deepest) / (1 + max level of the side
// opposite to the start).
double Penetration(const WalkRecord& r, const Partition& p,
                   const LevelMap& levels);

struct ControversyReport {
  double rwpr = 0.0;
  std::optional<double> bcrpr;    // absent when no walk crossed
  std::optional<double> average;  // (rwpr + bcrpr) / 2
  std::size_t total_walks = 0;
  std::size_t crossed_walks = 0;
  std::uint64_t total_steps = 0;
  std::map<std::string, std::size_t> terminations;
};

ControversyReport Score(std::span<const WalkRecord> records,
                        const Partition& p, const LevelMap& levels);

// Rows `start,crossed,deepest,steps,termination` with a header.
std::string WalkRecordsCsv(const Graph& g, std::span<const WalkRecord> records);

}  // namespace controversy

#endif  // CONTROVERSY_BRW_HPP_
