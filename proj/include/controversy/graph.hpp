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

#ifndef CONTROVERSY_GRAPH_HPP_
#define CONTROVERSY_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace controversy {

// Dense node index in [0, n).
using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Node-indexed attribute matrix with named columns (e.g. hashtag counts).
// Rows missing from the source file are all zero.
class AttributeTable {
 public:
  AttributeTable() = default;
  AttributeTable(std::vector<std::string> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<std::string>& columns() const { return columns_; }

  double at(std::size_t row, std::size_t col) const {
    return values_[row * cols() + col];
  }
  double& at(std::size_t row, std::size_t col) {
    return values_[row * cols() + col];
  }
  std::span<const double> row(std::size_t r) const {
    return {values_.data() + r * cols(), cols()};
  }
  std::span<double> row(std::size_t r) {
    return {values_.data() + r * cols(), cols()};
  }

  // New table whose i-th row is this table's rows[i].
  AttributeTable SelectRows(std::span<const NodeId> rows) const;

  friend bool operator==(const AttributeTable&, const AttributeTable&) = default;

 private:
  std::vector<std::string> columns_;
  std::size_t rows_ = 0;
  std::vector<double> values_;
};

// Immutable simple directed graph: no self-loops, no parallel edges.
// Keeps out-, in- and undirected (out ∪ in) adjacency, each sorted by id.
class Graph {
 public:
  Graph() = default;

  // Self-loops are dropped and duplicate edges collapsed.
  static Graph FromEdges(std::vector<std::string> labels,
                         std::span<const Edge> edges);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return out_targets_.size(); }

  std::span<const NodeId> out_neighbors(NodeId u) const {
    return Slice(out_offsets_, out_targets_, u);
  }
  std::span<const NodeId> in_neighbors(NodeId u) const {
    return Slice(in_offsets_, in_sources_, u);
  }
  // Distinct neighbors ignoring direction.
  std::span<const NodeId> neighbors(NodeId u) const {
    return Slice(und_offsets_, und_targets_, u);
  }

  std::size_t out_degree(NodeId u) const { return out_neighbors(u).size(); }
  std::size_t in_degree(NodeId u) const { return in_neighbors(u).size(); }

  bool has_edge(NodeId u, NodeId v) const;
  bool adjacent(NodeId u, NodeId v) const;  // either direction

  const std::string& label(NodeId u) const { return labels_[u]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

  const AttributeTable* attributes() const { return attributes_.get(); }
  Graph WithAttributes(AttributeTable table) const;
  Graph WithoutAttributes() const;

  // Edges in (source, target) lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  static std::span<const NodeId> Slice(const std::vector<std::size_t>& offsets,
                                       const std::vector<NodeId>& targets,
                                       NodeId u) {
    return {targets.data() + offsets[u], offsets[u + 1] - offsets[u]};
  }

  std::vector<std::string> labels_;
  std::shared_ptr<const std::unordered_map<std::string, NodeId>> index_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeId> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<NodeId> in_sources_;
  std::vector<std::size_t> und_offsets_{0};
  std::vector<NodeId> und_targets_;
  std::shared_ptr<const AttributeTable> attributes_;
};

// Parses `src<TAB>dst` lines; blank lines and lines starting with '#' are
// skipped. Ids are assigned in first-seen order. With reverse_edges every
// edge is read as dst -> src.
Graph LoadEdgeList(std::string_view text, bool reverse_edges = false);
Graph LoadEdgeListFile(const std::string& path, bool reverse_edges = false);
std::string WriteEdgeList(const Graph& g);

struct LoadedAttributes {
  AttributeTable table;
  std::vector<std::string> warnings;
};

// Comma-separated, header `node,<key1>,<key2>,...`. Rows are aligned to the
// graph's dense ids; labels unknown to the graph are skipped with a warning.
LoadedAttributes LoadAttributeTable(std::string_view text, const Graph& g);
LoadedAttributes LoadAttributeTableFile(const std::string& path,
                                        const Graph& g);

bool IsWeaklyConnected(const Graph& g);

// Induced subgraph on the largest weakly connected node set. Ties go to the
// component with the smallest minimum id.
Graph LargestWeaklyConnectedComponent(const Graph& g);

// Induced subgraph; the kept nodes are renumbered in ascending original id
// order so that InducedSubgraph(g, all nodes) == g.
Graph InducedSubgraph(const Graph& g, std::span<const NodeId> nodes);

// Uniform random subset of round(fraction * n) node ids, sorted.
std::vector<NodeId> SampleNodes(std::size_t n, double fraction,
                                std::uint64_t seed);

// Stable 64-bit hash of labels and edges.
std::uint64_t Fingerprint(const Graph& g);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace controversy

#endif  // CONTROVERSY_GRAPH_HPP_
