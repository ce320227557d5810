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

// Graph generators and brute-force reference implementations for tests.

#ifndef CONTROVERSY_TESTS_SUPPORT_TESTING_HPP_
#define CONTROVERSY_TESTS_SUPPORT_TESTING_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "controversy/features.hpp"
#include "controversy/graph.hpp"
#include "controversy/partition.hpp"

namespace controversy::testing {

struct Planted {
  Graph graph;
  Partition partition;
};

// Undirected stochastic block model stored with both edge directions.
// Block b holds nodes [offset_b, offset_b + sizes[b]).
Planted StochasticBlockModel(const std::vector<std::size_t>& sizes, double p_in,
                             double p_out, std::uint64_t seed);

// Undirected G(n, p), both directions stored.
Graph ErdosRenyi(std::size_t n, double p, std::uint64_t seed);

// Directed graph with each ordered pair present with probability p.
Graph RandomDigraph(std::size_t n, double p, std::uint64_t seed);

// Two k-cliques joined by `bridges` disjoint cross edges (undirected).
Planted BarbellOfCliques(std::size_t k, std::size_t bridges);

// Graph over labels "0".."n-1" from explicit directed edges.
Graph FromPairs(std::size_t n, const std::vector<Edge>& edges);

// Adds the reverse of every edge.
Graph Symmetrize(const Graph& g);

// Uniform side per node, both sides non-empty (n >= 2).
Partition RandomPartition(std::size_t n, std::uint64_t seed);

// Nodes [0, n/2) on X, the rest on Y.
Partition HalfSplit(std::size_t n);

// Random table with `cols` integer-valued columns.
AttributeTable RandomAttributes(std::size_t rows, std::size_t cols,
                                std::uint64_t seed);

// ---------------------------------------------------------------------------
// Oracles

// Endpoints of every cross-side edge, by scanning the edge list once.
std::vector<bool> BoundaryOracle(const Graph& g, const Partition& p);

// cross / max(1, internal) over distinct undirected pairs from one edge scan.
std::vector<double> ConductanceOracle(const Graph& g, const Partition& p);

// Levels from all-pairs shortest paths (Floyd-Warshall) inside each side.
std::vector<int> LevelsOracle(const Graph& g, const Partition& p);

// Spearman rank correlation with average ranks for ties.
double Spearman(const std::vector<double>& x, const std::vector<double>& y);

// Eigenvalues (descending) and unit eigenvectors (rows) of a symmetric
// matrix by textbook Jacobi rotations.
void SymmetricEigen(std::vector<double> a, std::size_t k,
                    std::vector<double>& values, std::vector<double>& vectors);

// Writes `contents` to a fresh file under the test temp directory.
std::string TempPath(const std::string& name);

}  // namespace controversy::testing

#endif  // CONTROVERSY_TESTS_SUPPORT_TESTING_HPP_
