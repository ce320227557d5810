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

#include "controversy/controversy.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "controversy/baselines.hpp"
#include "controversy/brw.hpp"
#include "controversy/command.hpp"
#include "controversy/energy.hpp"
#include "controversy/error.hpp"
#include "controversy/features.hpp"
#include "controversy/graph.hpp"
#include "controversy/partition.hpp"
#include "controversy/topology.hpp"

namespace cl = controversy;

struct cl_graph {
  cl::Graph graph;
};
struct cl_partition {
  cl::Partition partition;
};
struct cl_levels {
  cl::LevelMap levels;
};
struct cl_features {
  cl::FeatureSpace space;
};
struct cl_energy {
  cl::EnergyAssignment energy;
};
struct cl_config {
  cl::RunConfig config;
};

namespace {

thread_local std::string g_last_error;

cl_status Fail(cl_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
cl_status Guard(F&& body) {
  try {
    body();
    return CL_OK;
  } catch (const cl::Error& e) {
    switch (e.code()) {
      case cl::ErrorCode::kInvalidArgument:
        return Fail(CL_ERROR_INVALID_ARGUMENT, e.what());
      case cl::ErrorCode::kParse:
        return Fail(CL_ERROR_PARSE, e.what());
      case cl::ErrorCode::kIo:
        return Fail(CL_ERROR_IO, e.what());
      case cl::ErrorCode::kData:
        return Fail(CL_ERROR_DATA, e.what());
    }
    return Fail(CL_ERROR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(CL_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(CL_ERROR_INTERNAL, e.what());
  } catch (...) {
    return Fail(CL_ERROR_INTERNAL, "unknown error");
  }
}

void Require(const void* p, const char* name) {
  if (p == nullptr) throw cl::InvalidArgument(std::string(name) + " must not be NULL");
}

void CheckNode(const cl_graph* g, std::size_t n, uint32_t node) {
  (void)g;
  if (node >= n) throw cl::InvalidArgument("node " + std::to_string(node) + " out of range");
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

cl::Node2vecParams ToParams(const cl_node2vec_options& o) {
  cl::Node2vecParams p;
  p.dim = o.dim;
  p.walks_per_node = o.walks_per_node;
  p.walk_length = o.walk_length;
  p.window = o.window;
  p.p = o.p;
  p.q = o.q;
  p.epochs = o.epochs;
  p.negatives = o.negatives;
  p.learning_rate = o.learning_rate;
  p.deterministic = o.deterministic != 0;
  p.threads = o.threads == 0 ? 1 : o.threads;
  return p;
}

}  // namespace

extern "C" {

const char* cl_version(void) { return "1.0.0"; }

const char* cl_last_error(void) { return g_last_error.c_str(); }

void cl_string_free(char* s) { std::free(s); }

// Graphs ---------------------------------------------------------------------

cl_status cl_graph_load(const char* path, int reverse_edges, cl_graph** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new cl_graph{cl::LoadEdgeListFile(path, reverse_edges != 0)};
  });
}

cl_status cl_graph_parse(const char* text, int reverse_edges, cl_graph** out) {
  return Guard([&] {
    Require(text, "text");
    Require(out, "out");
    *out = new cl_graph{cl::LoadEdgeList(text, reverse_edges != 0)};
  });
}

cl_status cl_graph_attach_attributes(cl_graph* graph, const char* path) {
  return Guard([&] {
    Require(graph, "graph");
    Require(path, "path");
    cl::LoadedAttributes loaded = cl::LoadAttributeTableFile(path, graph->graph);
    graph->graph = graph->graph.WithAttributes(std::move(loaded.table));
  });
}

cl_status cl_graph_largest_component(const cl_graph* graph, cl_graph** out) {
  return Guard([&] {
    Require(graph, "graph");
    Require(out, "out");
    *out = new cl_graph{cl::LargestWeaklyConnectedComponent(graph->graph)};
  });
}

size_t cl_graph_node_count(const cl_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.node_count();
}

size_t cl_graph_edge_count(const cl_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.edge_count();
}

cl_status cl_graph_find(const cl_graph* graph, const char* label, uint32_t* node) {
  return Guard([&] {
    Require(graph, "graph");
    Require(label, "label");
    Require(node, "node");
    auto found = graph->graph.find(label);
    if (!found) throw cl::InvalidArgument(std::string("unknown node '") + label + "'");
    *node = *found;
  });
}

void cl_graph_free(cl_graph* graph) { delete graph; }

// Partitions -----------------------------------------------------------------

cl_status cl_partition_detect(const cl_graph* graph, uint64_t seed, cl_partition** out) {
  return Guard([&] {
    Require(graph, "graph");
    Require(out, "out");
    *out = new cl_partition{cl::DetectTwoCommunities(graph->graph, seed)};
  });
}

cl_status cl_partition_load(const cl_graph* graph, const char* path, cl_partition** out) {
  return Guard([&] {
    Require(graph, "graph");
    Require(path, "path");
    Require(out, "out");
    *out = new cl_partition{cl::LoadPartitionFile(path, graph->graph)};
  });
}

cl_status cl_partition_side(const cl_partition* partition, uint32_t node, cl_side* side) {
  return Guard([&] {
    Require(partition, "partition");
    Require(side, "side");
    CheckNode(nullptr, partition->partition.sides().size(), node);
    *side = partition->partition.side(node) == cl::Side::kX ? CL_SIDE_X : CL_SIDE_Y;
  });
}

void cl_partition_free(cl_partition* partition) { delete partition; }

// Structure ------------------------------------------------------------------

cl_status cl_levels_assign(const cl_graph* graph, const cl_partition* partition,
                           cl_levels** out) {
  return Guard([&] {
    Require(graph, "graph");
    Require(partition, "partition");
    Require(out, "out");
    *out = new cl_levels{cl::AssignLevels(graph->graph, partition->partition)};
  });
}

cl_status cl_levels_level(const cl_levels* levels, uint32_t node, int* level) {
  return Guard([&] {
    Require(levels, "levels");
    Require(level, "level");
    CheckNode(nullptr, levels->levels.level.size(), node);
    *level = levels->levels.level[node];
  });
}

cl_status cl_levels_max(const cl_levels* levels, cl_side side, int* level) {
  return Guard([&] {
    Require(levels, "levels");
    Require(level, "level");
    if (side != CL_SIDE_X && side != CL_SIDE_Y) throw cl::InvalidArgument("invalid side");
    *level = levels->levels.max(side == CL_SIDE_X ? cl::Side::kX : cl::Side::kY);
  });
}

void cl_levels_free(cl_levels* levels) { delete levels; }

cl_status cl_node_conductance(const cl_graph* graph, const cl_partition* partition,
                              uint32_t node, double* conductance) {
  return Guard([&] {
    Require(graph, "graph");
    Require(partition, "partition");
    Require(conductance, "conductance");
    CheckNode(graph, graph->graph.node_count(), node);
    *conductance = cl::NodeConductance(graph->graph, partition->partition, node);
  });
}

// Baselines ------------------------------------------------------------------

void cl_rwc_options_default(cl_rwc_options* options) {
  if (options == nullptr) return;
  const cl::RwcConfig d;
  *options = {d.k, d.repeats, d.seed, d.threads};
}

cl_status cl_rwc(const cl_graph* graph, const cl_partition* partition,
                 const cl_rwc_options* options, cl_rwc_result* result) {
  return Guard([&] {
    Require(graph, "graph");
    Require(partition, "partition");
    Require(result, "result");
    cl::RwcConfig config;
    if (options != nullptr) {
      config.k = options->k;
      config.repeats = options->repeats;
      config.seed = options->seed;
      config.threads = options->threads == 0 ? 1 : options->threads;
    }
    const cl::RwcResult r = cl::RandomWalkControversy(graph->graph, partition->partition, config);
    result->score = r.score;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) result->p[a][b] = r.p[a][b];
    }
    result->abandoned = r.abandoned;
  });
}

cl_status cl_guerra_polarity(const cl_graph* graph, const cl_partition* partition,
                             double* polarity) {
  return Guard([&] {
    Require(graph, "graph");
    Require(partition, "partition");
    Require(polarity, "polarity");
    *polarity = cl::GuerraPolarity(graph->graph, partition->partition);
  });
}

// Feature spaces -------------------------------------------------------------

void cl_node2vec_options_default(cl_node2vec_options* options) {
  if (options == nullptr) return;
  const cl::Node2vecParams d;
  *options = {d.dim,    d.walks_per_node, d.walk_length,   d.window,
              d.p,      d.q,              d.epochs,        d.negatives,
              d.learning_rate, d.deterministic ? 1 : 0, d.threads};
}

cl_status cl_features_node2vec(const cl_graph* graph, const cl_node2vec_options* options,
                               uint64_t seed, cl_features** out) {
  return Guard([&] {
    Require(graph, "graph");
    Require(out, "out");
    cl_node2vec_options o;
    cl_node2vec_options_default(&o);
    if (options != nullptr) o = *options;
    cl::Embedding e = cl::Node2vecEmbed(graph->graph, ToParams(o), seed);
    *out = new cl_features{cl::FeatureSpace(cl::FeatureMode::kNode2vec, std::move(e.vectors))};
  });
}

cl_status cl_features_attributes(const cl_graph* graph, size_t dim, uint64_t seed,
                                 cl_features** out) {
  return Guard([&] {
    Require(graph, "graph");
    Require(out, "out");
    const cl::AttributeTable* table = graph->graph.attributes();
    if (table == nullptr) throw cl::InvalidArgument("graph has no attributes attached");
    cl::PcaResult pca = cl::PcaReduce(*table, dim, seed);
    *out = new cl_features{
        cl::FeatureSpace(cl::FeatureMode::kAttributes, std::move(pca.projection))};
  });
}

cl_status cl_features_combine(const cl_features* structural, const cl_features* attributes,
                              cl_features** out) {
  return Guard([&] {
    Require(structural, "structural");
    Require(attributes, "attributes");
    Require(out, "out");
    *out = new cl_features{cl::AssembleFeatures(cl::FeatureMode::kBoth,
                                                &structural->space.vectors(),
                                                &attributes->space.vectors())};
  });
}

size_t cl_features_rows(const cl_features* features) {
  return features == nullptr ? 0 : features->space.size();
}

size_t cl_features_dim(const cl_features* features) {
  return features == nullptr ? 0 : features->space.dim();
}

cl_status cl_features_row(const cl_features* features, uint32_t node, double* values) {
  return Guard([&] {
    Require(features, "features");
    Require(values, "values");
    CheckNode(nullptr, features->space.size(), node);
    const auto row = features->space.row(node);
    std::copy(row.begin(), row.end(), values);
  });
}

void cl_features_free(cl_features* features) { delete features; }

// Energies and walks ---------------------------------------------------------

void cl_energy_options_default(cl_energy_options* options) {
  if (options == nullptr) return;
  const cl::EnergyParams d;
  options->mode = d.mode == cl::LossMode::kFull ? CL_LOSS_FULL : CL_LOSS_SIMPLE;
  options->multiplier = d.multiplier;
  options->alpha = d.weights.alpha;
  options->beta = d.weights.beta;
  options->gamma = d.weights.gamma;
  options->metric = d.metric == cl::Metric::kCosine ? CL_METRIC_COSINE : CL_METRIC_EUCLIDEAN;
}

cl_status cl_energy_assign(const cl_graph* graph, const cl_partition* partition,
                           const cl_levels* levels, const cl_features* features,
                           const cl_energy_options* options, cl_energy** out) {
  return Guard([&] {
    Require(graph, "graph");
    Require(partition, "partition");
    Require(levels, "levels");
    Require(features, "features");
    Require(out, "out");
    cl_energy_options o;
    cl_energy_options_default(&o);
    if (options != nullptr) o = *options;
    cl::EnergyParams params;
    params.mode = o.mode == CL_LOSS_SIMPLE ? cl::LossMode::kSimple : cl::LossMode::kFull;
    params.multiplier = o.multiplier;
    params.weights = {o.alpha, o.beta, o.gamma};
    params.metric = o.metric == CL_METRIC_COSINE ? cl::Metric::kCosine : cl::Metric::kEuclidean;
    *out = new cl_energy{cl::AssignEnergies(graph->graph, features->space, partition->partition,
                                            levels->levels, params)};
  });
}

cl_status cl_energy_node(const cl_energy* energy, uint32_t node, double* initial,
                         double* loss) {
  return Guard([&] {
    Require(energy, "energy");
    CheckNode(nullptr, energy->energy.initial.size(), node);
    if (initial != nullptr) *initial = energy->energy.initial[node];
    if (loss != nullptr) *loss = energy->energy.loss[node];
  });
}

void cl_energy_free(cl_energy* energy) { delete energy; }

void cl_brw_options_default(cl_brw_options* options) {
  if (options == nullptr) return;
  const cl::SimulationOptions d;
  *options = {d.walks_per_node, d.seed, d.threads, d.step_cap};
}

cl_status cl_brw_score(const cl_graph* graph, const cl_partition* partition,
                       const cl_levels* levels, const cl_energy* energy,
                       const cl_brw_options* options, cl_brw_result* result) {
  return Guard([&] {
    Require(graph, "graph");
    Require(partition, "partition");
    Require(levels, "levels");
    Require(energy, "energy");
    Require(result, "result");
    cl::SimulationOptions sim;
    if (options != nullptr) {
      sim.walks_per_node = options->walks_per_node;
      sim.seed = options->seed;
      sim.threads = options->threads == 0 ? 1 : options->threads;
      sim.step_cap = options->step_cap;
    }
    const auto records = cl::Simulate(graph->graph, partition->partition, levels->levels,
                                      energy->energy, sim);
    const cl::ControversyReport r = cl::Score(records, partition->partition, levels->levels);
    result->rwpr = r.rwpr;
    result->has_bcrpr = r.bcrpr.has_value() ? 1 : 0;
    result->bcrpr = r.bcrpr.value_or(0.0);
    result->average = r.average.value_or(0.0);
    result->total_walks = r.total_walks;
    result->crossed_walks = r.crossed_walks;
    result->total_steps = r.total_steps;
  });
}

// Command runner -------------------------------------------------------------

cl_status cl_config_create(cl_config** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new cl_config{};
  });
}

cl_status cl_config_set(cl_config* config, const char* key, const char* value) {
  return Guard([&] {
    Require(config, "config");
    Require(key, "key");
    if (value == nullptr) {
      config->config.Unset(key);
    } else {
      config->config.Set(key, value);
    }
  });
}

cl_status cl_config_load_file(cl_config* config, const char* path) {
  return Guard([&] {
    Require(config, "config");
    Require(path, "path");
    config->config.LoadFile(path);
  });
}

int cl_config_has(const cl_config* config, const char* key) {
  return config != nullptr && key != nullptr && config->config.Has(key) ? 1 : 0;
}

void cl_config_free(cl_config* config) { delete config; }

cl_status cl_run_command(const char* command, const cl_config* config, char** document) {
  return Guard([&] {
    Require(command, "command");
    Require(config, "config");
    const std::string doc = cl::RunCommand(command, config->config);
    if (document != nullptr) *document = CopyString(doc);
  });
}

}  // extern "C"
