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

#include "controversy/pipeline.hpp"

#include "controversy/error.hpp"
#include "controversy/random.hpp"

namespace controversy {

std::size_t PipelineConfig::structural_dims() const {
  if (mode == FeatureMode::kNode2vec) return dims;
  if (mode == FeatureMode::kAttributes) return 0;
  return struct_dims.value_or(dims / 2);
}

std::size_t PipelineConfig::attribute_dims() const {
  if (mode == FeatureMode::kAttributes) return dims;
  if (mode == FeatureMode::kNode2vec) return 0;
  return attr_dims.value_or(dims - structural_dims());
}

BuiltFeatures BuildFeatures(const Graph& g, const PipelineConfig& config) {
  const std::uint64_t embed_seed = StreamSeed(config.seed, "embed");
  std::optional<NodeVectors> structural, attributes;
  BuiltFeatures out{FeatureSpace(config.mode, NodeVectors()), 0, {}};

  if (config.mode != FeatureMode::kAttributes) {
    Node2vecParams params = config.node2vec;
    params.dim = config.structural_dims();
    params.threads = config.threads;
    Embedding e = CachedNode2vecEmbed(g, params, embed_seed, config.cache_dir);
    out.isolated_nodes = e.isolated_count;
    if (e.isolated_count > 0) {
      out.warnings.push_back(std::to_string(e.isolated_count) +
                             " isolated node(s) keep their random initial embedding");
    }
    structural = std::move(e.vectors);
  }
  if (config.mode != FeatureMode::kNode2vec) {
    if (g.attributes() == nullptr) {
      throw InvalidArgument("mode " + std::string(ToString(config.mode)) +
                            " needs an attribute table (attributes)");
    }
    PcaResult pca = PcaReduce(*g.attributes(), config.attribute_dims(),
                              DeriveSeed(embed_seed, 0x9ca));
    out.warnings.insert(out.warnings.end(), pca.warnings.begin(), pca.warnings.end());
    attributes = std::move(pca.projection);
  }
  out.space = AssembleFeatures(config.mode, structural ? &*structural : nullptr,
                               attributes ? &*attributes : nullptr);
  return out;
}

BrwOutcome RunBrw(const Graph& g, const Partition& p, const FeatureSpace& fs,
                  const PipelineConfig& config) {
  BrwOutcome out;
  out.levels = AssignLevels(g, p);
  out.boundary_count = BoundaryNodes(g, p).total();
  for (Side s : {Side::kX, Side::kY}) {
    if (out.levels.isolated_community[Index(s)]) {
      out.warnings.push_back(std::string("community ") + (s == Side::kX ? "X" : "Y") +
                             " has no boundary nodes; all its levels are 0");
    }
  }
  out.energy = AssignEnergies(g, fs, p, out.levels, config.energy);
  SimulationOptions sim;
  sim.walks_per_node = config.walks_per_node;
  sim.seed = StreamSeed(config.seed, "walks");
  sim.threads = config.threads;
  sim.step_cap = config.step_cap;
  out.records = Simulate(g, p, out.levels, out.energy, sim);
  out.report = Score(out.records, p, out.levels);
  return out;
}

BrwOutcome RunBrw(const Graph& g, const Partition& p,
                  const PipelineConfig& config) {
  BuiltFeatures features = BuildFeatures(g, config);
  BrwOutcome out = RunBrw(g, p, features.space, config);
  out.isolated_nodes = features.isolated_nodes;
  out.warnings.insert(out.warnings.begin(), features.warnings.begin(),
                      features.warnings.end());
  return out;
}

}  // namespace controversy
