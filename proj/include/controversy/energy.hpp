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

#ifndef CONTROVERSY_ENERGY_HPP_
#define CONTROVERSY_ENERGY_HPP_

#include <array>
#include <string_view>
#include <vector>

#include "controversy/features.hpp"
#include "controversy/graph.hpp"
#include "controversy/partition.hpp"
#include "controversy/topology.hpp"

namespace controversy {

// Floor applied to every distance before it is inverted or used as a loss.
inline constexpr double kDistanceFloor = 1e-9;

struct Centroids {
  std::array<Centroid, 2> by_side;

  const Centroid& own(Side s) const { return by_side[Index(s)]; }
  const Centroid& opposite(Side s) const { return by_side[Index(Opposite(s))]; }
};

Centroids ComputeCentroids(const FeatureSpace& fs, const Partition& p);

// multiplier * (1/max(eps, d_in) + 1/max(eps, d_out))
double InitialEnergy(double dist_own, double dist_opposite, double multiplier);
double InitialEnergy(const FeatureSpace& fs, const Partition& p,
                     const Centroids& c, NodeId u, double multiplier,
                     Metric metric = Metric::kEuclidean);

// max(eps, d_out)
double SimpleLoss(double dist_opposite);
double SimpleLoss(const FeatureSpace& fs, const Partition& p,
                  const Centroids& c, NodeId u,
                  Metric metric = Metric::kEuclidean);

struct LossWeights {
  double alpha = 1.0;  // closeness (level) term
  double beta = 1.0;   // distance to the opposite centroid
  double gamma = 1.0;  // inverse conductance term
};

// alpha * level / max(1, max_close)
//   + beta * d_out
//   + gamma * ((max_cond - cond) / max_cond, or 1 when max_cond == 0)
// floored at eps. The distance term is not normalized, unlike the other two.
double FullLoss(int level, int max_close, double dist_opposite,
                double conductance, double max_conductance,
                const LossWeights& w);

enum class LossMode { kSimple, kFull };

std::string_view ToString(LossMode mode);
LossMode ParseLossMode(std::string_view text);

struct EnergyParams {
  LossMode mode = LossMode::kFull;
  double multiplier = 1.0;
  LossWeights weights;
  Metric metric = Metric::kEuclidean;
};

struct EnergyAssignment {
  std::vector<double> initial;
  std::vector<double> loss;
  EnergyParams params;

  double mean_initial() const;
  double mean_loss() const;
};

EnergyAssignment AssignEnergies(const Graph& g, const FeatureSpace& fs,
                                const Partition& p, const LevelMap& levels,
                                const EnergyParams& params);

}  // namespace controversy

#endif  // CONTROVERSY_ENERGY_HPP_
