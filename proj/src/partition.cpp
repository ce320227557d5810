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

#include "controversy/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "controversy/error.hpp"
#include "controversy/random.hpp"

namespace controversy {

Partition::Partition(std::vector<Side> sides) : sides_(std::move(sides)) {
  for (Side s : sides_) ++counts_[Index(s)];
  if (counts_[0] == 0 || counts_[1] == 0) {
    throw DataError("partition invalid: one side empty");
  }
}

Partition Partition::Canonical() const {
  return sides_[0] == Side::kX ? *this : Swapped();
}

Partition Partition::Swapped() const {
  std::vector<Side> flipped(sides_.size());
  std::transform(sides_.begin(), sides_.end(), flipped.begin(), Opposite);
  return Partition(std::move(flipped));
}

namespace {

double Norm(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

Partition DetectTwoCommunities(const Graph& g, std::uint64_t seed,
                               const SpectralOptions& options) {
  const std::size_t n = g.node_count();
  if (n < 2) throw DataError("partitioning needs at least two nodes");
  if (!IsWeaklyConnected(g)) {
    throw DataError(
        "graph is not weakly connected; take the largest weakly connected "
        "component first");
  }

  // M = I + D^{-1/2} A D^{-1/2} = 2I - L_sym has spectrum in [0, 2]; its top
  // eigenvector is D^{1/2} 1 and its second is the Fiedler direction.
  std::vector<double> inv_sqrt_deg(n), trivial(n);
  for (NodeId u = 0; u < n; ++u) {
    const double d = static_cast<double>(g.neighbors(u).size());
    inv_sqrt_deg[u] = 1.0 / std::sqrt(d);
    trivial[u] = std::sqrt(d);
  }
  const double trivial_norm = Norm(trivial);
  for (double& t : trivial) t /= trivial_norm;

  auto deflate = [&](std::vector<double>& x) {
    const double proj = std::inner_product(x.begin(), x.end(), trivial.begin(), 0.0);
    for (std::size_t i = 0; i < n; ++i) x[i] -= proj * trivial[i];
  };
  auto normalize = [](std::vector<double>& x) {
    const double norm = Norm(x);
    if (norm == 0.0) return false;
    for (double& v : x) v /= norm;
    return true;
  };

  Rng rng(seed);
  std::vector<double> x(n), y(n);
  for (double& v : x) v = 2.0 * rng.Uniform() - 1.0;
  deflate(x);
  if (!normalize(x)) throw DataError("spectral bisection: degenerate start vector");

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    for (NodeId u = 0; u < n; ++u) {
      double acc = 0.0;
      for (NodeId v : g.neighbors(u)) acc += inv_sqrt_deg[v] * x[v];
      y[u] = x[u] + inv_sqrt_deg[u] * acc;
    }
    deflate(y);
    if (!normalize(y)) break;
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) delta += (y[i] - x[i]) * (y[i] - x[i]);
    x.swap(y);
    if (std::sqrt(delta) < options.tolerance) break;
  }

  std::vector<double> fiedler(n);
  for (NodeId u = 0; u < n; ++u) fiedler[u] = inv_sqrt_deg[u] * x[u];

  std::vector<Side> sides(n);
  std::size_t positives = 0;
  for (NodeId u = 0; u < n; ++u) {
    sides[u] = fiedler[u] > 0.0 ? Side::kY : Side::kX;
    positives += sides[u] == Side::kY;
  }
  if (positives == 0 || positives == n) {
    // Numerically flat vector: fall back to a median split.
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return fiedler[a] < fiedler[b]; });
    for (std::size_t i = 0; i < n; ++i) {
      sides[order[i]] = i < n / 2 ? Side::kX : Side::kY;
    }
  }
  return Partition(std::move(sides)).Canonical();
}

std::size_t CutSize(const Graph& g, const Partition& p) {
  std::size_t cut = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v && !p.same_side(u, v)) ++cut;
    }
  }
  return cut;
}

Partition LoadPartition(std::string_view text, const Graph& g) {
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> assigned(g.node_count(), kUnset);
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "partition line " + std::to_string(line_no);
    const auto tab = line.rfind('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(where + ": expected 'label<TAB>{0|1}'");
    }
    std::string_view label = line.substr(0, tab);
    std::string_view value = line.substr(tab + 1);
    if (value != "0" && value != "1") {
      throw ParseError(where + ": side must be 0 or 1, found '" +
                       std::string(value) + "'");
    }
    auto node = g.find(label);
    if (!node) {
      throw DataError(where + ": unknown node label '" + std::string(label) + "'");
    }
    const auto side = static_cast<std::uint8_t>(value[0] - '0');
    if (assigned[*node] != kUnset && assigned[*node] != side) {
      throw DataError(where + ": conflicting sides for node '" +
                      std::string(label) + "'");
    }
    assigned[*node] = side;
  }
  std::vector<Side> sides(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (assigned[u] == kUnset) {
      throw DataError("partition does not cover node '" + g.label(u) + "'");
    }
    sides[u] = static_cast<Side>(assigned[u]);
  }
  return Partition(std::move(sides)).Canonical();
}

Partition LoadPartitionFile(const std::string& path, const Graph& g) {
  return LoadPartition(ReadFile(path), g);
}

std::string WritePartition(const Graph& g, const Partition& p) {
  std::string out;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    out += g.label(u);
    out += p.side(u) == Side::kX ? "\t0\n" : "\t1\n";
  }
  return out;
}

}  // namespace controversy
