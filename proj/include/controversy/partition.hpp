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

#ifndef CONTROVERSY_PARTITION_HPP_
#define CONTROVERSY_PARTITION_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "controversy/graph.hpp"

namespace controversy {

enum class Side : std::uint8_t { kX = 0, kY = 1 };

constexpr Side Opposite(Side s) { return s == Side::kX ? Side::kY : Side::kX; }
constexpr int Index(Side s) { return static_cast<int>(s); }

// Two-way split of the node set. Both sides are non-empty.
class Partition {
 public:
  explicit Partition(std::vector<Side> sides);

  std::size_t size() const { return sides_.size(); }
  Side side(NodeId u) const { return sides_[u]; }
  const std::vector<Side>& sides() const { return sides_; }
  std::size_t count(Side s) const { return counts_[Index(s)]; }
  bool same_side(NodeId u, NodeId v) const { return sides_[u] == sides_[v]; }

  // Sides relabeled so node 0 is on X.
  Partition Canonical() const;
  Partition Swapped() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.sides_ == b.sides_;
  }

 private:
  std::vector<Side> sides_;
  std::array<std::size_t, 2> counts_{};
};

struct SpectralOptions {
  double tolerance = 1e-8;
  int max_iterations = 10000;
};

// Spectral bisection of the undirected view: the sign pattern of the
// Fiedler vector of the symmetric normalized Laplacian, found by seeded
// power iteration with deflation of the trivial eigenvector. Requires a
// weakly connected graph with at least two nodes. The result is canonical.
Partition DetectTwoCommunities(const Graph& g, std::uint64_t seed,
                               const SpectralOptions& options = {});

// Number of undirected edges joining the two sides.
std::size_t CutSize(const Graph& g, const Partition& p);

// One `label<TAB>{0|1}` line per node; result is canonical.
Partition LoadPartition(std::string_view text, const Graph& g);
Partition LoadPartitionFile(const std::string& path, const Graph& g);
std::string WritePartition(const Graph& g, const Partition& p);

}  // namespace controversy

#endif  // CONTROVERSY_PARTITION_HPP_
