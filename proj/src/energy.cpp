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

#include "controversy/energy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "controversy/error.hpp"

namespace controversy {

Centroids ComputeCentroids(const FeatureSpace& fs, const Partition& p) {
  return Centroids{{CommunityCentroid(fs, p, Side::kX),
                    CommunityCentroid(fs, p, Side::kY)}};
}

double InitialEnergy(double dist_own, double dist_opposite, double multiplier) {
  return multiplier * (1.0 / std::max(kDistanceFloor, dist_own) +
                       1.0 / std::max(kDistanceFloor, dist_opposite));
}

double InitialEnergy(const FeatureSpace& fs, const Partition& p,
                     const Centroids& c, NodeId u, double multiplier,
                     Metric metric) {
  const Side s = p.side(u);
  return InitialEnergy(Distance(fs.row(u), c.own(s), metric),
                       Distance(fs.row(u), c.opposite(s), metric), multiplier);
}

double SimpleLoss(double dist_opposite) {
  return std::max(kDistanceFloor, dist_opposite);
}

double SimpleLoss(const FeatureSpace& fs, const Partition& p,
                  const Centroids& c, NodeId u, Metric metric) {
  return SimpleLoss(Distance(fs.row(u), c.opposite(p.side(u)), metric));
}

double FullLoss(int level, int max_close, double dist_opposite,
                double conductance, double max_conductance,
                const LossWeights& w) {
  const double closeness =
      static_cast<double>(level) / static_cast<double>(std::max(1, max_close));
  const double conduction =
      max_conductance > 0.0 ? (max_conductance - conductance) / max_conductance : 1.0;
  const double loss = w.alpha * closeness + w.beta * dist_opposite + w.gamma * conduction;
  return std::max(kDistanceFloor, loss);
}

std::string_view ToString(LossMode mode) {
  return mode == LossMode::kSimple ? "simple" : "full";
}

LossMode ParseLossMode(std::string_view text) {
  if (text == "simple") return LossMode::kSimple;
  if (text == "full") return LossMode::kFull;
  throw InvalidArgument("energy-mode: expected simple|full, got '" +
                        std::string(text) + "'");
}

double EnergyAssignment::mean_initial() const {
  double s = 0.0;
  for (double v : initial) s += v;
  return initial.empty() ? 0.0 : s / static_cast<double>(initial.size());
}

double EnergyAssignment::mean_loss() const {
  double s = 0.0;
  for (double v : loss) s += v;
  return loss.empty() ? 0.0 : s / static_cast<double>(loss.size());
}

EnergyAssignment AssignEnergies(const Graph& g, const FeatureSpace& fs,
                                const Partition& p, const LevelMap& levels,
                                const EnergyParams& params) {
  const std::size_t n = g.node_count();
  if (fs.size() != n || p.size() != n || levels.level.size() != n) {
    throw InvalidArgument("energy: graph, features, partition and levels disagree on node count");
  }
  if (!(params.multiplier > 0.0) || !std::isfinite(params.multiplier)) {
    throw InvalidArgument("multiplier must be positive and finite");
  }
  const Centroids c = ComputeCentroids(fs, p);

  EnergyAssignment ea;
  ea.params = params;
  ea.initial.resize(n);
  ea.loss.resize(n);

  std::vector<double> cond;
  double max_cond = 0.0;
  if (params.mode == LossMode::kFull) {
    cond = NodeConductances(g, p);
    for (double v : cond) max_cond = std::max(max_cond, v);
  }
  for (NodeId u = 0; u < n; ++u) {
    const Side s = p.side(u);
    const double d_own = Distance(fs.row(u), c.own(s), params.metric);
    const double d_opp = Distance(fs.row(u), c.opposite(s), params.metric);
    ea.initial[u] = InitialEnergy(d_own, d_opp, params.multiplier);
    ea.loss[u] = params.mode == LossMode::kSimple
                     ? SimpleLoss(d_opp)
                     : FullLoss(levels.level[u], levels.max(s), d_opp, cond[u],
                                max_cond, params.weights);
  }
  return ea;
}

}  // namespace controversy
