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

// Randomized invariants checked against independent oracles.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "controversy/baselines.hpp"
#include "controversy/brw.hpp"
#include "controversy/energy.hpp"
#include "controversy/error.hpp"
#include "controversy/experiments.hpp"
#include "controversy/features.hpp"
#include "controversy/graph.hpp"
#include "controversy/partition.hpp"
#include "controversy/pipeline.hpp"
#include "controversy/random.hpp"
#include "controversy/topology.hpp"
#include "support/testing.hpp"

namespace controversy {
namespace {

using namespace ::controversy::testing;

constexpr int kTrials = 25;

struct Instance {
  Graph graph;
  Partition partition;
};

// Mixed instances: sparse digraphs, undirected ER graphs and planted blocks.
Instance MakeInstance(int trial) {
  const std::uint64_t seed = 1000 + trial;
  const std::size_t n = 8 + static_cast<std::size_t>(trial % 7) * 5;
  switch (trial % 3) {
    case 0: {
      Graph g = RandomDigraph(n, 0.12, seed);
      return {g, RandomPartition(n, seed)};
    }
    case 1: {
      Graph g = ErdosRenyi(n, 0.15, seed);
      return {g, RandomPartition(n, seed + 1)};
    }
    default: {
      Planted pl = StochasticBlockModel({n / 2, n - n / 2}, 0.4, 0.05, seed);
      return {pl.graph, pl.partition};
    }
  }
}

FeatureSpace RandomFeatures(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  NodeVectors v(n, dim);
  for (double& x : v.values) x = normal(rng);
  return FeatureSpace(FeatureMode::kNode2vec, std::move(v));
}

TEST(PropertyTest, LevelsMatchShortestPathOracle) {
  for (int t = 0; t < kTrials; ++t) {
    const Instance in = MakeInstance(t);
    const LevelMap levels = AssignLevels(in.graph, in.partition);
    EXPECT_EQ(levels.level, LevelsOracle(in.graph, in.partition)) << "trial " << t;
  }
}

TEST(PropertyTest, LevelsChangeByAtMostOneAlongInternalEdges) {
  for (int t = 0; t < kTrials; ++t) {
    const Instance in = MakeInstance(t);
    const LevelMap levels = AssignLevels(in.graph, in.partition);
    const BoundarySets b = BoundaryNodes(in.graph, in.partition);
    for (NodeId u = 0; u < in.graph.node_count(); ++u) {
      const Side s = in.partition.side(u);
      EXPECT_LE(levels.level[u], levels.max(s));
      EXPECT_GE(levels.level[u], 0);
      if (b.is_boundary[u]) EXPECT_EQ(levels.level[u], 0);
      if (levels.level[u] > 0 && !levels.isolated_community[Index(s)]) {
        EXPECT_FALSE(b.is_boundary[u]);
      }
      for (NodeId v : in.graph.neighbors(u)) {
        if (!in.partition.same_side(u, v)) continue;
        EXPECT_LE(std::abs(levels.level[u] - levels.level[v]), 1)
            << "trial " << t << " edge " << u << "-" << v;
      }
    }
  }
}

TEST(PropertyTest, BoundaryAndConductanceMatchOracles) {
  for (int t = 0; t < kTrials; ++t) {
    const Instance in = MakeInstance(t);
    EXPECT_EQ(BoundaryNodes(in.graph, in.partition).is_boundary,
              BoundaryOracle(in.graph, in.partition));
    const std::vector<double> got = NodeConductances(in.graph, in.partition);
    const std::vector<double> want = ConductanceOracle(in.graph, in.partition);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t u = 0; u < got.size(); ++u) EXPECT_DOUBLE_EQ(got[u], want[u]);
  }
}

TEST(PropertyTest, StructureIgnoresEdgeDirection) {
  for (int t = 0; t < kTrials; t += 3) {
    const Instance in = MakeInstance(t);
    std::vector<Edge> reversed;
    for (const auto& [u, v] : in.graph.edges()) reversed.emplace_back(v, u);
    const Graph r = Graph::FromEdges(in.graph.labels(), reversed);
    EXPECT_EQ(NodeConductances(r, in.partition), NodeConductances(in.graph, in.partition));
    EXPECT_EQ(AssignLevels(r, in.partition).level,
              AssignLevels(in.graph, in.partition).level);
  }
}

TEST(PropertyTest, SwappingSidesKeepsLevelsAndConductance) {
  for (int t = 0; t < kTrials; ++t) {
    const Instance in = MakeInstance(t);
    const Partition swapped = in.partition.Swapped();
    const LevelMap a = AssignLevels(in.graph, in.partition);
    const LevelMap b = AssignLevels(in.graph, swapped);
    EXPECT_EQ(a.level, b.level);
    EXPECT_EQ(a.max(Side::kX), b.max(Side::kY));
    EXPECT_EQ(NodeConductances(in.graph, in.partition),
              NodeConductances(in.graph, swapped));
  }
}

TEST(PropertyTest, DegreeSumsEqualEdgeCount) {
  for (int t = 0; t < kTrials; ++t) {
    const Graph& g = MakeInstance(t).graph;
    std::size_t out = 0, in = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      out += g.out_degree(u);
      in += g.in_degree(u);
      EXPECT_FALSE(g.has_edge(u, u));
    }
    EXPECT_EQ(out, g.edge_count());
    EXPECT_EQ(in, g.edge_count());
  }
}

TEST(PropertyTest, EdgeListRoundTrip) {
  for (int t = 0; t < kTrials; ++t) {
    const Graph& g = MakeInstance(t).graph;
    const Graph back = LoadEdgeList(WriteEdgeList(g));
    // Isolated nodes are not representable in an edge list.
    std::set<std::pair<std::string, std::string>> a, b;
    for (const auto& [u, v] : g.edges()) a.emplace(g.label(u), g.label(v));
    for (const auto& [u, v] : back.edges()) b.emplace(back.label(u), back.label(v));
    EXPECT_EQ(a, b);
  }
}

TEST(PropertyTest, PartitionRoundTrip) {
  for (int t = 0; t < kTrials; ++t) {
    const Instance in = MakeInstance(t);
    const Partition loaded = LoadPartition(WritePartition(in.graph, in.partition), in.graph);
    EXPECT_EQ(loaded, in.partition.Canonical());
  }
}

// Union-find over the undirected view.
std::vector<std::size_t> ComponentOracle(const Graph& g) {
  std::vector<std::size_t> parent(g.node_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : g.edges()) parent[find(u)] = find(v);
  std::vector<std::size_t> root(g.node_count());
  for (std::size_t u = 0; u < root.size(); ++u) root[u] = find(u);
  return root;
}

TEST(PropertyTest, LargestComponentMatchesUnionFind) {
  for (int t = 0; t < kTrials; ++t) {
    const Graph g = RandomDigraph(30, 0.02 + 0.002 * t, 500 + t);
    const std::vector<std::size_t> root = ComponentOracle(g);
    std::map<std::size_t, std::size_t> size;
    for (std::size_t r : root) ++size[r];
    std::size_t best = 0;
    for (const auto& [r, s] : size) best = std::max(best, s);
    const Graph lcc = LargestWeaklyConnectedComponent(g);
    EXPECT_EQ(lcc.node_count(), best);
    EXPECT_TRUE(IsWeaklyConnected(lcc));
    // Every kept edge exists in the original between the same labels.
    for (const auto& [u, v] : lcc.edges()) {
      EXPECT_TRUE(g.has_edge(*g.find(lcc.label(u)), *g.find(lcc.label(v))));
    }
  }
}

TEST(PropertyTest, InducedSubgraphMatchesEdgeFilter) {
  for (int t = 0; t < kTrials; ++t) {
    const Graph g = RandomDigraph(25, 0.15, 700 + t);
    const std::vector<NodeId> keep = SampleNodes(g.node_count(), 0.6, t);
    const Graph sub = InducedSubgraph(g, keep);
    std::set<NodeId> kept(keep.begin(), keep.end());
    std::set<std::pair<std::string, std::string>> want, got;
    for (const auto& [u, v] : g.edges()) {
      if (kept.count(u) && kept.count(v)) want.emplace(g.label(u), g.label(v));
    }
    for (const auto& [u, v] : sub.edges()) got.emplace(sub.label(u), sub.label(v));
    EXPECT_EQ(got, want);
    EXPECT_EQ(sub.node_count(), keep.size());
  }
}

TEST(PropertyTest, WalkCorpusShape) {
  for (int t = 0; t < 10; ++t) {
    const Graph g = ErdosRenyi(15, 0.3, 40 + t);
    Node2vecParams params;
    params.walks_per_node = 3;
    params.walk_length = 12;
    params.p = 0.5 + t * 0.2;
    params.q = 2.0 - t * 0.15;
    const WalkCorpus c = Node2vecWalks(g, params, t);
    std::size_t movable = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) movable += !g.neighbors(u).empty();
    EXPECT_EQ(c.walk_count(), movable * params.walks_per_node);
    for (std::size_t w = 0; w < c.walk_count(); ++w) {
      const auto walk = c.walk(w);
      EXPECT_EQ(walk.size(), params.walk_length);
      for (std::size_t i = 1; i < walk.size(); ++i) {
        EXPECT_TRUE(g.adjacent(walk[i - 1], walk[i]));
      }
    }
  }
}

TEST(PropertyTest, EnergiesMatchFormulaEvaluation) {
  for (int t = 0; t < kTrials; ++t) {
    const Instance in = MakeInstance(t);
    const FeatureSpace fs = RandomFeatures(in.graph.node_count(), 3, t);
    const LevelMap levels = AssignLevels(in.graph, in.partition);
    EnergyParams params;
    params.multiplier = 1.0 + t;
    params.weights = {0.5 + 0.1 * t, 1.5, 0.25 * (t % 4)};
    params.mode = t % 2 ? LossMode::kFull : LossMode::kSimple;
    params.metric = t % 5 == 0 ? Metric::kCosine : Metric::kEuclidean;
    const EnergyAssignment e = AssignEnergies(in.graph, fs, in.partition, levels, params);

    std::array<std::vector<double>, 2> centroid{std::vector<double>(3, 0.0),
                                                std::vector<double>(3, 0.0)};
    for (NodeId u = 0; u < fs.size(); ++u) {
      for (int k = 0; k < 3; ++k) centroid[Index(in.partition.side(u))][k] += fs.row(u)[k];
    }
    for (int s = 0; s < 2; ++s) {
      for (double& x : centroid[s]) x /= in.partition.count(static_cast<Side>(s));
    }
    const std::vector<double> cond = ConductanceOracle(in.graph, in.partition);
    const double max_cond = *std::max_element(cond.begin(), cond.end());
    for (NodeId u = 0; u < fs.size(); ++u) {
      const int s = Index(in.partition.side(u));
      const double din = std::max(1e-9, Distance(fs.row(u), centroid[s], params.metric));
      const double raw_out = Distance(fs.row(u), centroid[1 - s], params.metric);
      const double dout = std::max(1e-9, raw_out);
      EXPECT_NEAR(e.initial[u], params.multiplier * (1 / din + 1 / dout),
                  1e-9 * e.initial[u]);
      double loss = dout;
      if (params.mode == LossMode::kFull) {
        const int max_close = std::max(1, levels.max_level[s]);
        const double cterm = max_cond == 0.0 ? 1.0 : (max_cond - cond[u]) / max_cond;
        loss = std::max(1e-9, params.weights.alpha * levels.level[u] / max_close +
                                  params.weights.beta * raw_out + params.weights.gamma * cterm);
      }
      EXPECT_NEAR(e.loss[u], loss, 1e-9 * std::max(1.0, loss));
      EXPECT_GT(e.initial[u], 0.0);
      EXPECT_GT(e.loss[u], 0.0);
    }
  }
}

TEST(PropertyTest, PenetrationBoundsAndScoreOrdering) {
  for (int t = 0; t < kTrials; ++t) {
    const Instance in = MakeInstance(t);
    const FeatureSpace fs = RandomFeatures(in.graph.node_count(), 2, 90 + t);
    const LevelMap levels = AssignLevels(in.graph, in.partition);
    EnergyParams params;
    params.multiplier = 5.0;
    const EnergyAssignment e = AssignEnergies(in.graph, fs, in.partition, levels, params);
    SimulationOptions opts;
    opts.walks_per_node = 6;
    opts.seed = t;
    opts.step_cap = 500;
    const auto records = Simulate(in.graph, in.partition, levels, e, opts);
    std::size_t crossed = 0;
    for (const WalkRecord& r : records) {
      const double pen = Penetration(r, in.partition, levels);
      EXPECT_GE(pen, 0.0);
      EXPECT_LE(pen, 1.0);
      EXPECT_EQ(r.crossed, r.deepest_opposite_level >= 0);
      EXPECT_LE(r.steps, opts.step_cap);
      if (!r.crossed) EXPECT_EQ(pen, 0.0);
      crossed += r.crossed;
    }
    const ControversyReport rep = Score(records, in.partition, levels);
    EXPECT_EQ(rep.crossed_walks, crossed);
    EXPECT_GE(rep.rwpr, 0.0);
    EXPECT_LE(rep.rwpr, 1.0);
    if (rep.bcrpr) {
      EXPECT_LE(rep.rwpr, *rep.bcrpr + 1e-12);
      EXPECT_LE(*rep.bcrpr, 1.0);
      EXPECT_NEAR(*rep.average, (rep.rwpr + *rep.bcrpr) / 2, 1e-12);
    } else {
      EXPECT_EQ(rep.rwpr, 0.0);
    }
    std::size_t terms = 0;
    for (const auto& [name, count] : rep.terminations) terms += count;
    EXPECT_EQ(terms, records.size());
  }
}

TEST(PropertyTest, LargerMultiplierReachesAtLeastAsDeep) {
  // Same streams, more energy: every walk is a prefix-extension of the
  // lower-energy walk, so the deepest level reached cannot decrease.
  for (int t = 0; t < kTrials; ++t) {
    const Instance in = MakeInstance(t);
    const FeatureSpace fs = RandomFeatures(in.graph.node_count(), 2, 300 + t);
    const LevelMap levels = AssignLevels(in.graph, in.partition);
    EnergyParams params;
    params.multiplier = 1.0 + (t % 4);
    const EnergyAssignment lo = AssignEnergies(in.graph, fs, in.partition, levels, params);
    params.multiplier *= 2;
    const EnergyAssignment hi = AssignEnergies(in.graph, fs, in.partition, levels, params);
    SimulationOptions opts;
    opts.walks_per_node = 4;
    opts.seed = 77 + t;
    opts.step_cap = 2000;
    const auto a = Simulate(in.graph, in.partition, levels, lo, opts);
    const auto b = Simulate(in.graph, in.partition, levels, hi, opts);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_GE(b[i].steps, a[i].steps);
      EXPECT_GE(b[i].deepest_opposite_level, a[i].deepest_opposite_level);
    }
  }
}

TEST(PropertyTest, RwcSymmetricUnderSideSwap) {
  for (int t = 0; t < 6; ++t) {
    const Planted pl = StochasticBlockModel({30, 30}, 0.3, 0.03, 60 + t);
    RwcConfig c;
    c.k = 3;
    c.repeats = 200;
    c.seed = t;
    const double a = RandomWalkControversy(pl.graph, pl.partition, c).score;
    const double b = RandomWalkControversy(pl.graph, pl.partition.Swapped(), c).score;
    EXPECT_NEAR(a, b, 0.05) << "trial " << t;
    EXPECT_GE(a, -1.0);
    EXPECT_LE(a, 1.0);
  }
}

TEST(PropertyTest, GuerraWithinBounds) {
  for (int t = 0; t < kTrials; ++t) {
    const Instance in = MakeInstance(t);
    try {
      const double g = GuerraPolarity(in.graph, in.partition);
      EXPECT_GE(g, -0.5);
      EXPECT_LE(g, 0.5);
    } catch (const Error&) {
      // No cross edges on this instance.
      EXPECT_EQ(CutSize(in.graph, in.partition), 0u);
    }
  }
}

TEST(PropertyTest, AttributeNoiseDrawsFromOriginalRows) {
  for (int t = 0; t < 10; ++t) {
    const AttributeTable table = RandomAttributes(40, 3, t);
    const double p = 0.1 * t;
    const NoisyAttributes noisy = InjectAttributeNoise(table, p, 5 + t);
    std::size_t replaced = 0;
    for (std::size_t u = 0; u < table.rows(); ++u) {
      const NodeId d = noisy.donor[u];
      ASSERT_LT(d, table.rows());
      replaced += d != u;
      for (std::size_t c = 0; c < table.cols(); ++c) {
        EXPECT_EQ(noisy.table.at(u, c), table.at(d, c));
      }
    }
    EXPECT_EQ(noisy.replaced, replaced);
  }
}

TEST(PropertyTest, StructuralNoiseOnlyAddsCrossPairs) {
  for (int t = 0; t < 10; ++t) {
    const Graph g = RandomDigraph(20, 0.1, t);
    const Graph noisy = InjectStructuralNoise(g, 0.05 * t, 99);
    EXPECT_EQ(noisy.node_count(), g.node_count());
    EXPECT_EQ(noisy.labels(), g.labels());
    for (const auto& [u, v] : g.edges()) EXPECT_TRUE(noisy.has_edge(u, v));
    EXPECT_GE(noisy.edge_count(), g.edge_count());
  }
}

TEST(PropertyTest, ReportSerializationIsIdempotent) {
  for (int t = 0; t < 10; ++t) {
    SweepConfig config;
    config.base.seed = t;
    config.levels = {0.0, 0.25 * (t % 4 + 1)};
    std::vector<SweepRow> rows(2);
    for (int i = 0; i < 2; ++i) {
      rows[i].level = config.levels[i];
      rows[i].rwpr = 0.1 * t + i;
      if ((t + i) % 2) rows[i].bcrpr = 0.3 + t;
      if ((t + i) % 2) rows[i].average = 0.2;
      rows[i].total_walks = 100 * t;
    }
    const std::string once = Serialize(SweepDocument(config, rows));
    const auto parsed = ParseReport(once);
    EXPECT_EQ(Serialize(parsed), once);
    EXPECT_EQ(SweepRowsFromDocument(parsed), rows);
  }
}

}  // namespace
}  // namespace controversy
