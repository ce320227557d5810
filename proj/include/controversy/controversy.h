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

/* C interface to the controversy-lab library.
 *
 * Objects are opaque handles created by `*_create`/`*_load`/`*_detect` style
 * calls and released with the matching `*_free`. Every fallible call returns
 * a cl_status; on failure a message is available from cl_last_error() on the
 * calling thread until its next failing call. Strings returned through
 * `char**` are heap-allocated and must be released with cl_string_free(). */

#ifndef CONTROVERSY_CONTROVERSY_H_
#define CONTROVERSY_CONTROVERSY_H_

#include <stddef.h>
#include <stdint.h>

#if defined(CL_BUILDING_LIBRARY)
#define CL_API __attribute__((visibility("default")))
#else
#define CL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cl_status {
  CL_OK = 0,
  CL_ERROR_INVALID_ARGUMENT = 1,
  CL_ERROR_PARSE = 2,
  CL_ERROR_IO = 3,
  CL_ERROR_DATA = 4,
  CL_ERROR_INTERNAL = 5
} cl_status;

typedef enum cl_side { CL_SIDE_X = 0, CL_SIDE_Y = 1 } cl_side;

typedef enum cl_feature_mode {
  CL_FEATURES_NODE2VEC = 0,
  CL_FEATURES_ATTRIBUTES = 1,
  CL_FEATURES_BOTH = 2
} cl_feature_mode;

typedef enum cl_loss_mode { CL_LOSS_SIMPLE = 0, CL_LOSS_FULL = 1 } cl_loss_mode;

typedef enum cl_metric { CL_METRIC_EUCLIDEAN = 0, CL_METRIC_COSINE = 1 } cl_metric;

typedef struct cl_graph cl_graph;
typedef struct cl_partition cl_partition;
typedef struct cl_levels cl_levels;
typedef struct cl_features cl_features;
typedef struct cl_energy cl_energy;
typedef struct cl_config cl_config;

typedef struct cl_node2vec_options {
  size_t dim;
  size_t walks_per_node;
  size_t walk_length;
  size_t window;
  double p;
  double q;
  size_t epochs;
  size_t negatives;
  double learning_rate;
  int deterministic;
  unsigned threads;
} cl_node2vec_options;

typedef struct cl_energy_options {
  cl_loss_mode mode;
  double multiplier;
  double alpha;
  double beta;
  double gamma;
  cl_metric metric;
} cl_energy_options;

typedef struct cl_brw_options {
  size_t walks_per_node;
  uint64_t seed;
  unsigned threads;
  uint32_t step_cap;
} cl_brw_options;

typedef struct cl_brw_result {
  double rwpr;
  int has_bcrpr; /* 0 when no walk crossed; bcrpr and average are then 0 */
  double bcrpr;
  double average;
  uint64_t total_walks;
  uint64_t crossed_walks;
  uint64_t total_steps;
} cl_brw_result;

typedef struct cl_rwc_options {
  size_t k;
  size_t repeats;
  uint64_t seed;
  unsigned threads;
} cl_rwc_options;

typedef struct cl_rwc_result {
  double score;
  double p[2][2]; /* p[start side][absorbing side] */
  uint64_t abandoned;
} cl_rwc_result;

CL_API const char* cl_version(void);
CL_API const char* cl_last_error(void);
CL_API void cl_string_free(char* s);

/* Graphs. */
CL_API cl_status cl_graph_load(const char* path, int reverse_edges, cl_graph** out);
CL_API cl_status cl_graph_parse(const char* text, int reverse_edges, cl_graph** out);
CL_API cl_status cl_graph_attach_attributes(cl_graph* graph, const char* path);
CL_API cl_status cl_graph_largest_component(const cl_graph* graph, cl_graph** out);
CL_API size_t cl_graph_node_count(const cl_graph* graph);
CL_API size_t cl_graph_edge_count(const cl_graph* graph);
CL_API cl_status cl_graph_find(const cl_graph* graph, const char* label, uint32_t* node);
CL_API void cl_graph_free(cl_graph* graph);

/* Partitions. */
CL_API cl_status cl_partition_detect(const cl_graph* graph, uint64_t seed, cl_partition** out);
CL_API cl_status cl_partition_load(const cl_graph* graph, const char* path, cl_partition** out);
CL_API cl_status cl_partition_side(const cl_partition* partition, uint32_t node, cl_side* side);
CL_API void cl_partition_free(cl_partition* partition);

/* Structure. */
CL_API cl_status cl_levels_assign(const cl_graph* graph, const cl_partition* partition,
                                  cl_levels** out);
CL_API cl_status cl_levels_level(const cl_levels* levels, uint32_t node, int* level);
CL_API cl_status cl_levels_max(const cl_levels* levels, cl_side side, int* level);
CL_API void cl_levels_free(cl_levels* levels);
CL_API cl_status cl_node_conductance(const cl_graph* graph, const cl_partition* partition,
                                     uint32_t node, double* conductance);

/* Baselines. */
CL_API void cl_rwc_options_default(cl_rwc_options* options);
CL_API cl_status cl_rwc(const cl_graph* graph, const cl_partition* partition,
                        const cl_rwc_options* options, cl_rwc_result* result);
CL_API cl_status cl_guerra_polarity(const cl_graph* graph, const cl_partition* partition,
                                    double* polarity);

/* Feature spaces. */
CL_API void cl_node2vec_options_default(cl_node2vec_options* options);
CL_API cl_status cl_features_node2vec(const cl_graph* graph, const cl_node2vec_options* options,
                                      uint64_t seed, cl_features** out);
/* PCA of the graph's attribute table down to `dim` columns. */
CL_API cl_status cl_features_attributes(const cl_graph* graph, size_t dim, uint64_t seed,
                                        cl_features** out);
CL_API cl_status cl_features_combine(const cl_features* structural,
                                     const cl_features* attributes, cl_features** out);
CL_API size_t cl_features_rows(const cl_features* features);
CL_API size_t cl_features_dim(const cl_features* features);
CL_API cl_status cl_features_row(const cl_features* features, uint32_t node, double* values);
CL_API void cl_features_free(cl_features* features);

/* Energies and biased random walks. */
CL_API void cl_energy_options_default(cl_energy_options* options);
CL_API cl_status cl_energy_assign(const cl_graph* graph, const cl_partition* partition,
                                  const cl_levels* levels, const cl_features* features,
                                  const cl_energy_options* options, cl_energy** out);
CL_API cl_status cl_energy_node(const cl_energy* energy, uint32_t node, double* initial,
                                double* loss);
CL_API void cl_energy_free(cl_energy* energy);

CL_API void cl_brw_options_default(cl_brw_options* options);
CL_API cl_status cl_brw_score(const cl_graph* graph, const cl_partition* partition,
                              const cl_levels* levels, const cl_energy* energy,
                              const cl_brw_options* options, cl_brw_result* result);

/* Command runner: the same subcommands and keys as the CLI. */
CL_API cl_status cl_config_create(cl_config** out);
CL_API cl_status cl_config_set(cl_config* config, const char* key, const char* value);
CL_API cl_status cl_config_load_file(cl_config* config, const char* path);
/* 1 when `key` holds a value, 0 otherwise. */
CL_API int cl_config_has(const cl_config* config, const char* key);
CL_API void cl_config_free(cl_config* config);
/* Runs `command`; stores its primary document (NUL-terminated) in *document
 * when document is non-NULL. */
CL_API cl_status cl_run_command(const char* command, const cl_config* config,
                                char** document);

#ifdef __cplusplus
}
#endif

#endif /* CONTROVERSY_CONTROVERSY_H_ */
