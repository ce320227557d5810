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

#include "controversy/features.hpp"

#include <cmath>
#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "controversy/error.hpp"
#include "support/testing.hpp"

namespace controversy {
namespace {

using namespace ::controversy::testing;

Node2vecParams SmallParams() {
  Node2vecParams params;
  params.dim = 8;
  params.walks_per_node = 5;
  params.walk_length = 20;
  params.window = 4;
  params.epochs = 2;
  return params;
}

double Cosine(std::span<const double> a, std::span<const double> b) {
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  return dot / std::sqrt(na * nb);
}

// --- node2vec -------------------------------------------------------------

TEST(Node2vecWalksTest, WalksFollowUndirectedEdges) {
  const Graph g = FromPairs(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}});
  const WalkCorpus corpus = Node2vecWalks(g, SmallParams(), 3);
  ASSERT_EQ(corpus.walk_count(), 5u * 5u);
  std::vector<int> starts(5, 0);
  for (std::size_t w = 0; w < corpus.walk_count(); ++w) {
    const auto walk = corpus.walk(w);
    ASSERT_EQ(walk.size(), 20u);
    ++starts[walk[0]];
    for (std::size_t i = 1; i < walk.size(); ++i) {
      ASSERT_TRUE(g.adjacent(walk[i - 1], walk[i]));
    }
  }
  for (int s : starts) EXPECT_EQ(s, 5);
}

TEST(Node2vecWalksTest, ThreadCountDoesNotChangeCorpus) {
  const Graph g = ErdosRenyi(60, 0.1, 4);
  Node2vecParams one = SmallParams(), many = SmallParams();
  many.threads = 4;
  const WalkCorpus a = Node2vecWalks(g, one, 11), b = Node2vecWalks(g, many, 11);
  EXPECT_EQ(a.tokens, b.tokens);
  EXPECT_EQ(a.offsets, b.offsets);
}

TEST(Node2vecWalksTest, LowReturnParameterBacktracks) {
  // On a path the walk can only go back or forward; tiny p favors returning.
  const Graph g = Symmetrize(FromPairs(30, [] {
    std::vector<Edge> e;
    for (NodeId i = 0; i + 1 < 30; ++i) e.emplace_back(i, i + 1);
    return e;
  }()));
  auto backtracks = [&](double p) {
    Node2vecParams params = SmallParams();
    params.p = p;
    params.q = 1.0;
    const WalkCorpus c = Node2vecWalks(g, params, 1);
    std::size_t count = 0, total = 0;
    for (std::size_t w = 0; w < c.walk_count(); ++w) {
      const auto walk = c.walk(w);
      for (std::size_t i = 2; i < walk.size(); ++i) {
        if (g.neighbors(walk[i - 1]).size() < 2) continue;
        count += walk[i] == walk[i - 2];
        ++total;
      }
    }
    return static_cast<double>(count) / static_cast<double>(total);
  };
  EXPECT_GT(backtracks(0.1), 0.8);
  EXPECT_LT(backtracks(10.0), 0.2);
}

TEST(Node2vecEmbedTest, SameSeedIsBitIdentical) {
  const Graph g = ErdosRenyi(40, 0.15, 2);
  const Embedding a = Node2vecEmbed(g, SmallParams(), 5);
  const Embedding b = Node2vecEmbed(g, SmallParams(), 5);
  EXPECT_EQ(a.vectors, b.vectors);
  EXPECT_NE(a.vectors, Node2vecEmbed(g, SmallParams(), 6).vectors);
}

TEST(Node2vecEmbedTest, CommunitiesSeparate) {
  const Planted sbm = StochasticBlockModel({100, 100}, 0.1, 0.005, 21);
  Node2vecParams params = SmallParams();
  params.dim = 16;
  params.walks_per_node = 10;
  params.walk_length = 40;
  const Embedding e = Node2vecEmbed(sbm.graph, params, 1);
  const FeatureSpace fs(FeatureMode::kNode2vec, e.vectors);
  const Centroid cx = CommunityCentroid(fs, sbm.partition, Side::kX);
  const Centroid cy = CommunityCentroid(fs, sbm.partition, Side::kY);
  double intra = 0.0, inter = 0.0;
  for (NodeId u = 0; u < 200; ++u) {
    const bool x = sbm.partition.side(u) == Side::kX;
    intra += Distance(fs.row(u), x ? cx : cy);
    inter += Distance(fs.row(u), x ? cy : cx);
  }
  EXPECT_LT(intra / 200, inter / 200);
}

TEST(Node2vecEmbedTest, NeighborsMoreSimilarThanStrangers) {
  const Graph g = ErdosRenyi(30, 0.12, 5);
  Node2vecParams params = SmallParams();
  params.epochs = 5;
  const Embedding e = Node2vecEmbed(g, params, 2);
  double adj = 0, non = 0;
  int na = 0, nn = 0;
  for (NodeId u = 0; u < 30; ++u) {
    for (NodeId v = u + 1; v < 30; ++v) {
      const double c = Cosine(e.vectors.row(u), e.vectors.row(v));
      if (g.adjacent(u, v)) {
        adj += c;
        ++na;
      } else {
        non += c;
        ++nn;
      }
    }
  }
  EXPECT_GT(adj / na, non / nn);
}

TEST(Node2vecEmbedTest, IsolatedNodeKeepsInitialVector) {
  const Graph g = FromPairs(4, {{0, 1}, {1, 2}});
  const Embedding e = Node2vecEmbed(g, SmallParams(), 1);
  EXPECT_EQ(e.isolated_count, 1u);
  EXPECT_TRUE(e.isolated[3]);
  Node2vecParams untrained = SmallParams();
  untrained.epochs = 0;
  const Embedding init = Node2vecEmbed(g, untrained, 1);
  for (std::size_t d = 0; d < 8; ++d) EXPECT_EQ(e.vectors.row(3)[d], init.vectors.row(3)[d]);
  for (double v : e.vectors.values) EXPECT_TRUE(std::isfinite(v));
}

TEST(Node2vecEmbedTest, RejectsBadParameters) {
  const Graph g = FromPairs(2, {{0, 1}});
  Node2vecParams p = SmallParams();
  p.dim = 1;
  EXPECT_THROW(Node2vecEmbed(g, p, 0), Error);
  p = SmallParams();
  p.q = 0.0;
  EXPECT_THROW(Node2vecEmbed(g, p, 0), Error);
  EXPECT_THROW(Node2vecEmbed(Graph(), SmallParams(), 0), Error);
}

TEST(Node2vecEmbedTest, ParallelTrainingStaysFinite) {
  const Graph g = ErdosRenyi(50, 0.1, 9);
  Node2vecParams p = SmallParams();
  p.deterministic = false;
  p.threads = 4;
  const Embedding e = Node2vecEmbed(g, p, 3);
  ASSERT_EQ(e.vectors.rows, 50u);
  for (double v : e.vectors.values) EXPECT_TRUE(std::isfinite(v));
}

// --- PCA ------------------------------------------------------------------

TEST(PcaTest, CollinearPointsNeedOneComponent) {
  AttributeTable t({"x", "y"}, 5);
  for (std::size_t r = 0; r < 5; ++r) {
    t.at(r, 0) = static_cast<double>(r);
    t.at(r, 1) = 2.0 * static_cast<double>(r);
  }
  const PcaResult pca = PcaReduce(t, 2, 1);
  ASSERT_EQ(pca.eigenvalues.size(), 2u);
  EXPECT_NEAR(pca.eigenvalues[1], 0.0, 1e-9);
  EXPECT_NEAR(pca.eigenvalues[0], 12.5, 1e-9);  // var(x)+var(y) = 2.5 + 10
  // First component along (1,2)/sqrt(5) with a positive largest loading.
  EXPECT_NEAR(pca.components[0], 1.0 / std::sqrt(5.0), 1e-9);
  EXPECT_NEAR(pca.components[1], 2.0 / std::sqrt(5.0), 1e-9);
}

TEST(PcaTest, FullRankReconstructs) {
  const AttributeTable t = RandomAttributes(30, 4, 3);
  const PcaResult pca = PcaReduce(t, 4, 2);
  std::vector<double> mean(4, 0.0);
  for (std::size_t r = 0; r < 30; ++r) {
    for (std::size_t c = 0; c < 4; ++c) mean[c] += t.at(r, c) / 30.0;
  }
  for (std::size_t r = 0; r < 30; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      double x = mean[c];
      for (std::size_t k = 0; k < 4; ++k) {
        x += pca.projection.row(r)[k] * pca.components[k * 4 + c];
      }
      EXPECT_NEAR(x, t.at(r, c), 1e-9);
    }
  }
}

TEST(PcaTest, MatchesDenseEigensolver) {
  const AttributeTable t = RandomAttributes(50, 10, 12);
  const PcaResult pca = PcaReduce(t, 3, 4);
  // Sample covariance oracle.
  std::vector<double> mean(10, 0.0), cov(100, 0.0);
  for (std::size_t r = 0; r < 50; ++r) {
    for (std::size_t c = 0; c < 10; ++c) mean[c] += t.at(r, c) / 50.0;
  }
  for (std::size_t r = 0; r < 50; ++r) {
    for (std::size_t i = 0; i < 10; ++i) {
      for (std::size_t j = 0; j < 10; ++j) {
        cov[i * 10 + j] += (t.at(r, i) - mean[i]) * (t.at(r, j) - mean[j]) / 49.0;
      }
    }
  }
  std::vector<double> values, vectors;
  SymmetricEigen(cov, 10, values, vectors);
  double projected_variance = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_NEAR(pca.eigenvalues[k], values[k], 1e-8 * values[0]);
    for (std::size_t r = 0; r < 50; ++r) {
      projected_variance += pca.projection.row(r)[k] * pca.projection.row(r)[k] / 49.0;
    }
  }
  EXPECT_NEAR(projected_variance, values[0] + values[1] + values[2], 1e-8 * values[0]);
}

TEST(PcaTest, ComponentsOrthonormalAndSorted) {
  const AttributeTable t = RandomAttributes(40, 6, 8);
  const PcaResult pca = PcaReduce(t, 4, 1);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      double dot = 0;
      for (std::size_t c = 0; c < 6; ++c) dot += pca.components[a * 6 + c] * pca.components[b * 6 + c];
      EXPECT_NEAR(dot, a == b ? 1.0 : 0.0, 1e-8);
    }
    if (a > 0) EXPECT_GE(pca.eigenvalues[a - 1], pca.eigenvalues[a]);
  }
  // Projected columns are uncorrelated.
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      double dot = 0;
      for (std::size_t r = 0; r < 40; ++r) dot += pca.projection.row(r)[a] * pca.projection.row(r)[b];
      EXPECT_NEAR(dot / 39.0, 0.0, 1e-8 * pca.eigenvalues[0]);
    }
  }
}

TEST(PcaTest, SignConvention) {
  const AttributeTable t = RandomAttributes(25, 5, 6);
  const PcaResult pca = PcaReduce(t, 3, 7);
  for (std::size_t k = 0; k < 3; ++k) {
    double best = 0.0;
    for (std::size_t c = 0; c < 5; ++c) {
      if (std::abs(pca.components[k * 5 + c]) > std::abs(best)) best = pca.components[k * 5 + c];
    }
    EXPECT_GT(best, 0.0);
  }
}

TEST(PcaTest, SeedDoesNotChangeTheAnswer) {
  const AttributeTable t = RandomAttributes(25, 5, 6);
  const PcaResult a = PcaReduce(t, 2, 1), b = PcaReduce(t, 2, 99);
  for (std::size_t i = 0; i < a.projection.values.size(); ++i) {
    EXPECT_NEAR(a.projection.values[i], b.projection.values[i], 1e-7);
  }
}

TEST(PcaTest, ZeroVarianceWarns) {
  AttributeTable t({"a", "b"}, 4);
  for (std::size_t r = 0; r < 4; ++r) t.at(r, 0) = t.at(r, 1) = 3.0;
  const PcaResult pca = PcaReduce(t, 1, 0);
  EXPECT_EQ(pca.warnings.size(), 1u);
  for (double v : pca.projection.values) EXPECT_EQ(v, 0.0);
}

TEST(PcaTest, DimOutOfRange) {
  const AttributeTable t = RandomAttributes(5, 3, 1);
  EXPECT_THROW(PcaReduce(t, 0), Error);
  EXPECT_THROW(PcaReduce(t, 4), Error);
}

// --- assembly, centroids, distances ------------------------------------------

TEST(AssembleFeaturesTest, ModesAndDims) {
  NodeVectors s(3, 10), a(3, 10);
  for (std::size_t i = 0; i < 30; ++i) {
    s.values[i] = static_cast<double>(i);
    a.values[i] = -static_cast<double>(i);
  }
  const FeatureSpace both = AssembleFeatures(FeatureMode::kBoth, &s, &a);
  EXPECT_EQ(both.dim(), 20u);
  EXPECT_EQ(both.mode(), FeatureMode::kBoth);
  for (NodeId u = 0; u < 3; ++u) {
    for (std::size_t d = 0; d < 10; ++d) {
      EXPECT_EQ(both.row(u)[d], s.row(u)[d]);
      EXPECT_EQ(both.row(u)[10 + d], a.row(u)[d]);
    }
  }
  EXPECT_EQ(AssembleFeatures(FeatureMode::kNode2vec, &s, nullptr).dim(), 10u);
  EXPECT_EQ(AssembleFeatures(FeatureMode::kAttributes, nullptr, &a).dim(), 10u);
  EXPECT_THROW(AssembleFeatures(FeatureMode::kBoth, &s, nullptr), Error);
  EXPECT_THROW(AssembleFeatures(FeatureMode::kAttributes, &s, nullptr), Error);
  NodeVectors short_rows(2, 10);
  EXPECT_THROW(AssembleFeatures(FeatureMode::kBoth, &s, &short_rows), Error);
}

TEST(FeatureSpaceTest, RejectsNonFinite) {
  NodeVectors v(1, 2);
  v.values[1] = std::nan("");
  EXPECT_THROW(FeatureSpace(FeatureMode::kNode2vec, v), Error);
}

TEST(FeatureModeTest, ParseRoundTrip) {
  for (FeatureMode m : {FeatureMode::kNode2vec, FeatureMode::kAttributes, FeatureMode::kBoth}) {
    EXPECT_EQ(ParseFeatureMode(ToString(m)), m);
  }
  EXPECT_THROW(ParseFeatureMode("deepwalk"), Error);
  EXPECT_EQ(ParseMetric("cosine"), Metric::kCosine);
  EXPECT_THROW(ParseMetric("manhattan"), Error);
}

TEST(CentroidTest, MeanOfMembers) {
  NodeVectors v(3, 2);
  v.values = {0, 0, 2, 2, 5, 7};
  const FeatureSpace fs(FeatureMode::kNode2vec, v);
  const Partition p({Side::kX, Side::kX, Side::kY});
  EXPECT_EQ(CommunityCentroid(fs, p, Side::kX), (Centroid{1.0, 1.0}));
  EXPECT_EQ(CommunityCentroid(fs, p, Side::kY), (Centroid{5.0, 7.0}));
}

TEST(DistanceTest, EuclideanAndCosine) {
  const std::vector<double> o{0, 0}, p{3, 4}, q{6, 8}, r{-3, -4}, s{4, -3};
  EXPECT_DOUBLE_EQ(Distance(o, p), 5.0);
  EXPECT_DOUBLE_EQ(Distance(p, p), 0.0);
  EXPECT_NEAR(Distance(p, q, Metric::kCosine), 0.0, 1e-15);
  EXPECT_NEAR(Distance(p, r, Metric::kCosine), 2.0, 1e-15);
  EXPECT_NEAR(Distance(p, s, Metric::kCosine), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(Distance(o, o, Metric::kCosine), 0.0);
  EXPECT_DOUBLE_EQ(Distance(o, p, Metric::kCosine), 1.0);
  const std::vector<double> three{1, 2, 3};
  EXPECT_THROW(Distance(p, three), Error);
}

// --- cache ------------------------------------------------------------------

TEST(EmbeddingCacheTest, EncodeDecodeRoundTrip) {
  NodeVectors v(3, 2);
  v.values = {1.5, -2.0, 0.0, 1e-300, 3.25, -0.0};
  const std::string bytes = EncodeEmbedding(v, FeatureMode::kBoth, 42, 0xfeed);
  EXPECT_EQ(bytes.substr(0, 8), "CLEMBED1");
  EXPECT_EQ(bytes.size(), 8u + 8 + 8 + 4 + 4 + 8 + 8 + 6 * 8);
  const CachedEmbedding back = DecodeEmbedding(bytes);
  EXPECT_EQ(back.vectors, v);
  EXPECT_EQ(back.mode, FeatureMode::kBoth);
  EXPECT_EQ(back.seed, 42u);
  EXPECT_EQ(back.key, 0xfeedu);
  EXPECT_THROW(DecodeEmbedding(bytes.substr(0, 20)), Error);
  EXPECT_THROW(DecodeEmbedding("XXXXXXXX" + bytes.substr(8)), Error);
  EXPECT_THROW(DecodeEmbedding(bytes.substr(0, bytes.size() - 1)), Error);
}

TEST(EmbeddingCacheTest, LittleEndianHeader) {
  NodeVectors v(1, 1);
  v.values = {1.0};
  const std::string bytes = EncodeEmbedding(v, FeatureMode::kNode2vec, 0, 0);
  EXPECT_EQ(static_cast<unsigned char>(bytes[8]), 1u);  // n = 1, low byte first
  EXPECT_EQ(static_cast<unsigned char>(bytes[16]), 1u);
  // 1.0 = 0x3FF0000000000000: last payload byte is 0x3F.
  EXPECT_EQ(static_cast<unsigned char>(bytes.back()), 0x3Fu);
}

TEST(EmbeddingCacheTest, TextExport) {
  const Graph g = LoadEdgeList("a\tb\n");
  NodeVectors v(2, 2);
  v.values = {1, 0.5, -2, 0};
  EXPECT_EQ(EmbeddingText(g, v), "a 1 0.5\nb -2 0\n");
}

TEST(EmbeddingCacheTest, KeyDependsOnInputs) {
  const Graph g = ErdosRenyi(20, 0.2, 1);
  const Node2vecParams p = SmallParams();
  Node2vecParams q = p;
  q.window = 5;
  EXPECT_EQ(EmbeddingCacheKey(g, p, 1), EmbeddingCacheKey(g, p, 1));
  EXPECT_NE(EmbeddingCacheKey(g, p, 1), EmbeddingCacheKey(g, p, 2));
  EXPECT_NE(EmbeddingCacheKey(g, p, 1), EmbeddingCacheKey(g, q, 1));
  EXPECT_NE(EmbeddingCacheKey(g, p, 1), EmbeddingCacheKey(ErdosRenyi(20, 0.2, 2), p, 1));
}

TEST(EmbeddingCacheTest, SecondCallReadsCache) {
  const std::string dir = TempPath("embed-cache");
  std::filesystem::remove_all(dir);
  const Graph g = ErdosRenyi(25, 0.2, 3);
  const Embedding first = CachedNode2vecEmbed(g, SmallParams(), 4, dir);
  ASSERT_EQ(std::distance(std::filesystem::directory_iterator(dir),
                          std::filesystem::directory_iterator()),
            1);
  const Embedding second = CachedNode2vecEmbed(g, SmallParams(), 4, dir);
  EXPECT_EQ(first.vectors, second.vectors);
  EXPECT_EQ(first.vectors, Node2vecEmbed(g, SmallParams(), 4).vectors);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace controversy
