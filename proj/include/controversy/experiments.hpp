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

#ifndef CONTROVERSY_EXPERIMENTS_HPP_
#define CONTROVERSY_EXPERIMENTS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "controversy/graph.hpp"
#include "controversy/partition.hpp"
#include "controversy/pipeline.hpp"

namespace controversy {

struct NoiseConfig {
  double structural_p = 0.0;
  double attribute_p = 0.0;
  std::uint64_t seed = 0;
};

// Each node, independently with probability p, gains one out-edge to a
// uniformly drawn other node. A draw hitting an existing edge is retried up
// to 10 times, then skipped. Node u draws from its own stream
// DeriveSeed(seed, u), so for a fixed seed the edge sets are nested in p.
// Attributes are carried over.
Graph InjectStructuralNoise(const Graph& g, double p, std::uint64_t seed);

struct NoisyAttributes {
  AttributeTable table;
  std::vector<NodeId> donor;  // donor[u] == u when the row was kept
  std::size_t replaced = 0;
};

// Each row, independently with probability p, becomes a copy of a uniformly
// chosen other node's row in the input (pre-noise) table.
NoisyAttributes InjectAttributeNoise(const AttributeTable& t, double p,
                                     std::uint64_t seed);

enum class NoiseAxis { kStructural, kAttribute, kBoth };

std::string_view ToString(NoiseAxis axis);
NoiseAxis ParseNoiseAxis(std::string_view text);

// "start:stop:step" (inclusive) or a comma-separated list.
std::vector<double> ParseLevels(std::string_view text);

struct SweepConfig {
  PipelineConfig base;
  std::vector<double> levels{0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                             0.6, 0.7, 0.8, 0.9, 1.0};
  NoiseAxis axis = NoiseAxis::kStructural;
  bool repartition = false;
};

struct SweepRow {
  double level = 0.0;
  double rwpr = 0.0;
  std::optional<double> bcrpr;
  std::optional<double> average;
  double mean_initial = 0.0;
  double mean_loss = 0.0;
  std::size_t boundary_count = 0;
  std::size_t edge_count = 0;
  std::size_t total_walks = 0;
  std::size_t crossed_walks = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

// One row per level: noise the clean inputs, rebuild features, reuse (or
// recompute) the partition, re-derive levels and energies, then walk and
// score. Every level draws from the same named streams of the master seed,
// so a row depends only on (inputs, level, config) and not on which other
// levels were swept.
std::vector<SweepRow> NoiseSweep(const Graph& g, const Partition& clean,
                                 const SweepConfig& config);

SweepRow RunSweepLevel(const Graph& g, const Partition& clean,
                       const SweepConfig& config, double level);

// ---------------------------------------------------------------------------
// Report documents: JSON with a schema tag and version.

inline constexpr std::string_view kReportSchema = "controversy-lab.report";
inline constexpr int kReportSchemaVersion = 1;

nlohmann::ordered_json ReportEnvelope(std::string_view kind);
nlohmann::ordered_json ToJson(const SweepRow& row);
SweepRow SweepRowFromJson(const nlohmann::ordered_json& j);
nlohmann::ordered_json SweepConfigJson(const SweepConfig& config);
nlohmann::ordered_json PipelineConfigJson(const PipelineConfig& config);

nlohmann::ordered_json SweepDocument(const SweepConfig& config,
                                     const std::vector<SweepRow>& rows);
std::vector<SweepRow> SweepRowsFromDocument(const nlohmann::ordered_json& doc);

// Two-space indented JSON plus trailing newline.
std::string Serialize(const nlohmann::ordered_json& doc);
// Parses and checks the schema tag and version.
nlohmann::ordered_json ParseReport(std::string_view text);

void WriteReport(const nlohmann::ordered_json& doc, const std::string& path);
nlohmann::ordered_json ReadReport(const std::string& path);

}  // namespace controversy

#endif  // CONTROVERSY_EXPERIMENTS_HPP_
