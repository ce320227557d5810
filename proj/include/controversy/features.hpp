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

#ifndef CONTROVERSY_FEATURES_HPP_
#define CONTROVERSY_FEATURES_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "controversy/graph.hpp"
#include "controversy/partition.hpp"

namespace controversy {

// Row-major per-node real vectors.
struct NodeVectors {
  std::size_t rows = 0;
  std::size_t dim = 0;
  std::vector<double> values;

  NodeVectors() = default;
  NodeVectors(std::size_t rows, std::size_t dim)
      : rows(rows), dim(dim), values(rows * dim, 0.0) {}

  std::span<const double> row(std::size_t r) const {
    return {values.data() + r * dim, dim};
  }
  std::span<double> row(std::size_t r) { return {values.data() + r * dim, dim}; }

  friend bool operator==(const NodeVectors&, const NodeVectors&) = default;
};

// ---------------------------------------------------------------------------
// node2vec

struct Node2vecParams {
  std::size_t dim = 20;
  std::size_t walks_per_node = 10;
  std::size_t walk_length = 80;
  std::size_t window = 10;
  double p = 1.0;  // return parameter
  double q = 1.0;  // in-out parameter
  std::size_t epochs = 5;
  std::size_t negatives = 5;
  double learning_rate = 0.025;
  // Single-threaded SGD (bit-reproducible). When false and threads > 1 the
  // skip-gram updates run lock-free on all workers and are not reproducible.
  bool deterministic = true;
  unsigned threads = 1;
};

struct Embedding {
  NodeVectors vectors;
  std::vector<bool> isolated;  // no neighbors: random init, never updated
  std::size_t isolated_count = 0;
};

// Flat walk corpus: walk i is tokens[offsets[i], offsets[i+1]).
struct WalkCorpus {
  std::vector<NodeId> tokens;
  std::vector<std::size_t> offsets{0};

  std::size_t walk_count() const { return offsets.size() - 1; }
  std::span<const NodeId> walk(std::size_t i) const {
    return {tokens.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }
};

// Second-order (p, q)-biased walks over the undirected view, walks_per_node
// rounds with a shuffled start order per round.
WalkCorpus Node2vecWalks(const Graph& g, const Node2vecParams& params,
                         std::uint64_t seed);

// Walks followed by skip-gram with negative sampling trained by SGD.
Embedding Node2vecEmbed(const Graph& g, const Node2vecParams& params,
                        std::uint64_t seed);

// ---------------------------------------------------------------------------
// PCA

struct PcaResult {
  NodeVectors projection;            // rows x dim scores
  std::vector<double> eigenvalues;   // top-dim covariance eigenvalues, descending
  std::vector<double> components;    // dim x cols, row-major, orthonormal rows
  std::size_t iterations = 0;
  std::vector<std::string> warnings;
};

// Projects the column-centered table onto the top `dim` eigenvectors of its
// sample covariance. Eigenvectors come from seeded orthogonal (subspace)
// iteration with Rayleigh-Ritz steps, tolerance 1e-10. Each component is
// signed so its largest-magnitude loading is positive.
PcaResult PcaReduce(const AttributeTable& table, std::size_t dim,
                    std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Feature space

enum class FeatureMode { kNode2vec, kAttributes, kBoth };

std::string_view ToString(FeatureMode mode);
FeatureMode ParseFeatureMode(std::string_view text);

class FeatureSpace {
 public:
  FeatureSpace(FeatureMode mode, NodeVectors vectors);

  FeatureMode mode() const { return mode_; }
  std::size_t size() const { return vectors_.rows; }
  std::size_t dim() const { return vectors_.dim; }
  std::span<const double> row(NodeId u) const { return vectors_.row(u); }
  const NodeVectors& vectors() const { return vectors_; }

 private:
  FeatureMode mode_;
  NodeVectors vectors_;
};

// node2vec -> structural only; attributes -> attribute only; both ->
// concatenation with the structural part first.
FeatureSpace AssembleFeatures(FeatureMode mode, const NodeVectors* structural,
                              const NodeVectors* attributes);

using Centroid = std::vector<double>;

Centroid CommunityCentroid(const FeatureSpace& fs, const Partition& p,
                           Side side);

enum class Metric { kEuclidean, kCosine };

std::string_view ToString(Metric metric);
Metric ParseMetric(std::string_view text);

// Euclidean, or cosine distance 1 - cos clamped to [0, 2]. A zero vector has
// cosine distance 1 to everything except another zero vector (0).
double Distance(std::span<const double> a, std::span<const double> b,
                Metric metric = Metric::kEuclidean);

// ---------------------------------------------------------------------------
// Embedding cache: 8-byte magic "CLEMBED1", then little-endian u64 n,
// u64 dim, u32 mode, u32 reserved, u64 seed, u64 key, followed by n*dim
// little-endian IEEE-754 doubles in row-major order.

struct CachedEmbedding {
  NodeVectors vectors;
  FeatureMode mode = FeatureMode::kNode2vec;
  std::uint64_t seed = 0;
  std::uint64_t key = 0;
};

std::string EncodeEmbedding(const NodeVectors& vectors, FeatureMode mode,
                            std::uint64_t seed, std::uint64_t key);
CachedEmbedding DecodeEmbedding(std::string_view bytes);

// `label v1 ... vd` per line.
std::string EmbeddingText(const Graph& g, const NodeVectors& vectors);

std::uint64_t EmbeddingCacheKey(const Graph& g, const Node2vecParams& params,
                                 std::uint64_t seed);

// Loads `<cache_dir>/<key>.emb` when present and matching, otherwise trains
// and stores it. An empty cache_dir disables caching.
Embedding CachedNode2vecEmbed(const Graph& g, const Node2vecParams& params,
                              std::uint64_t seed, const std::string& cache_dir);

}  // namespace controversy

#endif  // CONTROVERSY_FEATURES_HPP_
