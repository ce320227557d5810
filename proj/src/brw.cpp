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

#include "controversy/brw.hpp"

#include <algorithm>
#include <map>

#include "controversy/error.hpp"
#include "controversy/parallel.hpp"

namespace controversy {

std::string_view ToString(Termination t) {
  switch (t) {
    case Termination::kEnergyExhausted: return "energy_exhausted";
    case Termination::kDeadEnd: return "dead_end";
    case Termination::kStepCap: return "step_cap";
  }
  return "unknown";
}

WalkEngine::WalkEngine(const Graph& g, const Partition& p,
                       const LevelMap& levels, const EnergyAssignment& energy,
                       std::uint32_t step_cap)
    : g_(g), p_(p), levels_(levels), energy_(energy), step_cap_(step_cap) {
  const std::size_t n = g.node_count();
  if (p.size() != n || levels.level.size() != n || energy.initial.size() != n ||
      energy.loss.size() != n) {
    throw InvalidArgument("walk engine: inputs disagree on node count");
  }
  std::map<std::pair<int, int>, std::uint32_t> ids;
  group_of_.resize(n);
  pos_in_group_.resize(n);
  for (NodeId u = 0; u < n; ++u) {
    const std::pair<int, int> key{Index(p.side(u)), levels.level[u]};
    auto [it, inserted] = ids.emplace(key, static_cast<std::uint32_t>(groups_.size()));
    if (inserted) groups_.emplace_back();
    group_of_[u] = it->second;
    pos_in_group_[u] = static_cast<std::uint32_t>(groups_[it->second].size());
    groups_[it->second].push_back(u);
  }
}

WalkRecord WalkEngine::Run(NodeId start, Rng& rng) const {
  WalkRecord rec;
  rec.start = start;
  const Side home = p_.side(start);
  NodeId current = start;
  double energy = energy_.initial[start];
  while (true) {
    if (energy <= 0.0) {
      rec.terminated_by = Termination::kEnergyExhausted;
      break;
    }
    if (rec.steps >= step_cap_) {
      rec.terminated_by = Termination::kStepCap;
      break;
    }
    NodeId next;
    auto out = g_.out_neighbors(current);
    if (!out.empty()) {
      next = out[rng.Below(out.size())];
    } else {
      const auto& peers = groups_[group_of_[current]];
      if (peers.size() < 2) {
        rec.terminated_by = Termination::kDeadEnd;
        break;
      }
      // Uniform over the group minus the current node.
      std::size_t pick = rng.Below(peers.size() - 1);
      if (pick >= pos_in_group_[current]) ++pick;
      next = peers[pick];
    }
    energy -= energy_.loss[next];
    ++rec.steps;
    if (p_.side(next) != home) {
      rec.crossed = true;
      rec.deepest_opposite_level =
          std::max(rec.deepest_opposite_level, levels_.level[next]);
    }
    current = next;
  }
  return rec;
}

WalkRecord RunWalk(const Graph& g, const Partition& p, const LevelMap& levels,
                   const EnergyAssignment& energy, NodeId start, Rng& rng,
                   std::uint32_t step_cap) {
  return WalkEngine(g, p, levels, energy, step_cap).Run(start, rng);
}

std::vector<WalkRecord> Simulate(const Graph& g, const Partition& p,
                                 const LevelMap& levels,
                                 const EnergyAssignment& energy,
                                 const SimulationOptions& options) {
  if (options.walks_per_node < 1) throw InvalidArgument("walks per node must be >= 1");
  const WalkEngine engine(g, p, levels, energy, options.step_cap);
  const std::size_t w = options.walks_per_node;
  std::vector<WalkRecord> records(g.node_count() * w);
  ParallelFor(records.size(), options.threads, [&](std::size_t slot) {
    const auto u = static_cast<NodeId>(slot / w);
    Rng rng(DeriveSeed(options.seed, u, slot % w));
    records[slot] = engine.Run(u, rng);
  });
  return records;
}

double Penetration(const WalkRecord& r, const Partition& p,
                   const LevelMap& levels) {
  if (!r.crossed) return 0.0;
  const int max_level = levels.max(Opposite(p.side(r.start)));
  return static_cast<double>(1 + r.deepest_opposite_level) /
         static_cast<double>(1 + max_level);
}

ControversyReport Score(std::span<const WalkRecord> records,
                        const Partition& p, const LevelMap& levels) {
  if (records.empty()) throw InvalidArgument("cannot score an empty walk list");
  ControversyReport report;
  report.total_walks = records.size();
  double sum = 0.0;
  for (const WalkRecord& r : records) {
    const double pen = Penetration(r, p, levels);
    sum += pen;
    report.crossed_walks += r.crossed ? 1 : 0;
    report.total_steps += r.steps;
    ++report.terminations[std::string(ToString(r.terminated_by))];
  }
  report.rwpr = sum / static_cast<double>(records.size());
  if (report.crossed_walks > 0) {
    report.bcrpr = sum / static_cast<double>(report.crossed_walks);
    report.average = 0.5 * (report.rwpr + *report.bcrpr);
  }
  return report;
}

std::string WalkRecordsCsv(const Graph& g, std::span<const WalkRecord> records) {
  std::string out = "start,crossed,deepest,steps,termination\n";
  for (const WalkRecord& r : records) {
    out += g.label(r.start);
    out += r.crossed ? ",1," : ",0,";
    out += std::to_string(r.deepest_opposite_level);
    out += ',';
    out += std::to_string(r.steps);
    out += ',';
    out += ToString(r.terminated_by);
    out += '\n';
  }
  return out;
}

}  // namespace controversy
