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

#ifndef CONTROVERSY_PIPELINE_HPP_
#define CONTROVERSY_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "controversy/brw.hpp"
#include "controversy/energy.hpp"
#include "controversy/features.hpp"
#include "controversy/graph.hpp"
#include "controversy/partition.hpp"
#include "controversy/topology.hpp"

namespace controversy {

// Settings for one features -> energies -> walks -> score run.
struct PipelineConfig {
  FeatureMode mode = FeatureMode::kNode2vec;
  std::size_t dims = 20;
  // Split used by mode `both`; default dims/2 structural, the rest attributes.
  std::optional<std::size_t> struct_dims;
  std::optional<std::size_t> attr_dims;
  Node2vecParams node2vec;  // node2vec.dim is overridden from the fields above
  EnergyParams energy;
  std::size_t walks_per_node = 50;
  std::uint32_t step_cap = kDefaultStepCap;
  std::uint64_t seed = 0;  // master seed; streams derive from it by name
  unsigned threads = 1;
  std::string cache_dir;

  std::size_t structural_dims() const;
  std::size_t attribute_dims() const;
};

struct BuiltFeatures {
  FeatureSpace space;
  std::size_t isolated_nodes = 0;
  std::vector<std::string> warnings;
};

// Feature space for the configured mode. Attribute modes need attributes
// attached to the graph.
BuiltFeatures BuildFeatures(const Graph& g, const PipelineConfig& config);

struct BrwOutcome {
  LevelMap levels;
  std::size_t boundary_count = 0;
  EnergyAssignment energy;
  std::vector<WalkRecord> records;
  ControversyReport report;
  std::size_t isolated_nodes = 0;
  std::vector<std::string> warnings;
};

BrwOutcome RunBrw(const Graph& g, const Partition& p,
                  const PipelineConfig& config);

// Same, on an already-built feature space.
BrwOutcome RunBrw(const Graph& g, const Partition& p, const FeatureSpace& fs,
                  const PipelineConfig& config);

}  // namespace controversy

#endif  // CONTROVERSY_PIPELINE_HPP_
