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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>

#include "controversy/error.hpp"
#include "controversy/parallel.hpp"
#include "controversy/random.hpp"

namespace controversy {

// ---------------------------------------------------------------------------
// node2vec

WalkCorpus Node2vecWalks(const Graph& g, const Node2vecParams& params,
                         std::uint64_t seed) {
  if (params.walk_length == 0) throw InvalidArgument("walk_length must be >= 1");
  if (!(params.p > 0.0) || !(params.q > 0.0)) {
    throw InvalidArgument("node2vec p and q must be positive");
  }
  const std::size_t n = g.node_count();
  const std::size_t rounds = params.walks_per_node;
  const std::uint64_t order_seed = DeriveSeed(seed, 1);
  const std::uint64_t step_seed = DeriveSeed(seed, 2);

  const double inv_p = 1.0 / params.p;
  const double inv_q = 1.0 / params.q;
  const double max_weight = std::max({inv_p, 1.0, inv_q});

  std::vector<std::vector<NodeId>> walks(rounds * n);
  std::vector<NodeId> starts(rounds * n);
  for (std::size_t r = 0; r < rounds; ++r) {
    std::iota(starts.begin() + r * n, starts.begin() + (r + 1) * n, NodeId{0});
    Rng shuffle(DeriveSeed(order_seed, r));
    for (std::size_t i = n; i > 1; --i) {
      std::swap(starts[r * n + i - 1], starts[r * n + shuffle.Below(i)]);
    }
  }

  ParallelFor(walks.size(), params.threads, [&](std::size_t slot) {
    const NodeId start = starts[slot];
    Rng rng(DeriveSeed(step_seed, start, slot / n));
    std::vector<NodeId>& walk = walks[slot];
    walk.reserve(params.walk_length);
    walk.push_back(start);
    while (walk.size() < params.walk_length) {
      const NodeId cur = walk.back();
      auto nb = g.neighbors(cur);
      if (nb.empty()) break;
      if (walk.size() == 1) {
        walk.push_back(nb[rng.Below(nb.size())]);
        continue;
      }
      const NodeId prev = walk[walk.size() - 2];
      // Rejection sampling against the unnormalized (1/p, 1, 1/q) weights.
      while (true) {
        const NodeId next = nb[rng.Below(nb.size())];
        const double weight =
            next == prev ? inv_p : (g.adjacent(prev, next) ? 1.0 : inv_q);
        if (rng.Uniform() * max_weight < weight) {
          walk.push_back(next);
          break;
        }
      }
    }
  });

  WalkCorpus corpus;
  std::size_t total = 0;
  for (const auto& w : walks) total += w.size();
  corpus.tokens.reserve(total);
  corpus.offsets.reserve(walks.size() + 1);
  for (const auto& w : walks) {
    corpus.tokens.insert(corpus.tokens.end(), w.begin(), w.end());
    corpus.offsets.push_back(corpus.tokens.size());
  }
  return corpus;
}

namespace {

// Cumulative unigram^0.75 table for negative sampling.
class NegativeSampler {
 public:
  // Quantized unigram table: O(1) draws, each node holding a share of
  // slots proportional to its weight.
  explicit NegativeSampler(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (total <= 0.0) return;
    table_.resize(kTableSize);
    std::size_t node = 0;
    double acc = weights[0];
    for (std::size_t i = 0; i < kTableSize; ++i) {
      const double target = (static_cast<double>(i) + 0.5) / kTableSize * total;
      while (acc < target && node + 1 < weights.size()) acc += weights[++node];
      while (weights[node] <= 0.0 && node + 1 < weights.size()) acc += weights[++node];
      table_[i] = static_cast<NodeId>(node);
    }
  }

  bool empty() const { return table_.empty(); }

  NodeId Sample(Rng& rng) const { return table_[rng.Below(table_.size())]; }

 private:
  static constexpr std::size_t kTableSize = std::size_t{1} << 20;
  std::vector<NodeId> table_;
};

// Logistic function tabulated on [-kMaxExp, kMaxExp]; saturates outside.
class SigmoidTable {
 public:
  SigmoidTable() : values_(kSize) {
    for (std::size_t i = 0; i < kSize; ++i) {
      const double x = (2.0 * static_cast<double>(i) / kSize - 1.0) * kMaxExp;
      values_[i] = 1.0 / (1.0 + std::exp(-x));
    }
  }

  double operator()(double x) const {
    if (x >= kMaxExp) return 1.0;
    if (x <= -kMaxExp) return 0.0;
    return values_[static_cast<std::size_t>((x + kMaxExp) * (kSize / kMaxExp / 2.0))];
  }

 private:
  static constexpr std::size_t kSize = 4096;
  static constexpr double kMaxExp = 8.0;
  std::vector<double> values_;
};

// Plain or relaxed-atomic access to the shared parameter arrays.
template <bool kShared>
struct Access {
  static double Load(const double& x) {
    if constexpr (kShared) {
      return std::atomic_ref<double>(const_cast<double&>(x)).load(std::memory_order_relaxed);
    } else {
      return x;
    }
  }
  static void Store(double& x, double v) {
    if constexpr (kShared) {
      std::atomic_ref<double>(x).store(v, std::memory_order_relaxed);
    } else {
      x = v;
    }
  }
};

struct SgdState {
  std::size_t dim;
  std::vector<double>& input;   // the embedding
  std::vector<double>& output;  // context weights
  const NegativeSampler& sampler;
  const SigmoidTable& sigmoid;
  std::size_t negatives;
  std::size_t window;
  double learning_rate;
  std::size_t total_tokens;
};

// Four partial sums so the reduction vectorizes.
double Dot(const double* __restrict a, const double* __restrict b, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t d = 0;
  for (; d + 4 <= n; d += 4) {
    for (std::size_t k = 0; k < 4; ++k) acc[k] += a[d + k] * b[d + k];
  }
  for (; d < n; ++d) acc[0] += a[d] * b[d];
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

void Update(const double* __restrict l1, double* __restrict out,
            double* __restrict grad, double g, std::size_t n) {
  for (std::size_t d = 0; d < n; ++d) {
    grad[d] += g * out[d];
    out[d] += g * l1[d];
  }
}

template <bool kShared>
void TrainWalks(const SgdState& s, const WalkCorpus& corpus, std::size_t begin,
                std::size_t end, std::size_t epochs, Rng& rng,
                std::atomic<std::size_t>& processed) {
  using A = Access<kShared>;
  std::vector<double> l1(s.dim), grad(s.dim);
  std::size_t local = 0;
  for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
    for (std::size_t w = begin; w < end; ++w) {
      auto walk = corpus.walk(w);
      for (std::size_t i = 0; i < walk.size(); ++i) {
        const std::size_t done =
            kShared ? processed.fetch_add(1, std::memory_order_relaxed) : local++;
        const double lr =
            s.learning_rate *
            std::max(1e-4, 1.0 - static_cast<double>(done) /
                                     static_cast<double>(s.total_tokens + 1));
        const NodeId center = walk[i];
        const std::size_t reach = s.window - rng.Below(s.window);
        const std::size_t lo = i >= reach ? i - reach : 0;
        const std::size_t hi = std::min(walk.size() - 1, i + reach);
        for (std::size_t j = lo; j <= hi; ++j) {
          if (j == i) continue;
          double* in = s.input.data() + std::size_t{walk[j]} * s.dim;
          for (std::size_t d = 0; d < s.dim; ++d) l1[d] = A::Load(in[d]);
          std::fill(grad.begin(), grad.end(), 0.0);
          for (std::size_t k = 0; k <= s.negatives; ++k) {
            NodeId target = center;
            double label = 1.0;
            if (k > 0) {
              target = s.sampler.Sample(rng);
              if (target == center) continue;
              label = 0.0;
            }
            double* out = s.output.data() + std::size_t{target} * s.dim;
            double g = 0.0;
            if constexpr (kShared) {
              double dot = 0.0;
              for (std::size_t d = 0; d < s.dim; ++d) dot += l1[d] * A::Load(out[d]);
              g = (label - s.sigmoid(dot)) * lr;
              for (std::size_t d = 0; d < s.dim; ++d) {
                const double o = A::Load(out[d]);
                grad[d] += g * o;
                A::Store(out[d], o + g * l1[d]);
              }
            } else {
              g = (label - s.sigmoid(Dot(l1.data(), out, s.dim))) * lr;
              Update(l1.data(), out, grad.data(), g, s.dim);
            }
          }
          for (std::size_t d = 0; d < s.dim; ++d) {
            A::Store(in[d], A::Load(in[d]) + grad[d]);
          }
        }
      }
    }
  }
}

}  // namespace

Embedding Node2vecEmbed(const Graph& g, const Node2vecParams& params,
                        std::uint64_t seed) {
  const std::size_t n = g.node_count();
  if (n == 0) throw InvalidArgument("cannot embed an empty graph");
  if (params.dim < 2) throw InvalidArgument("embedding dim must be >= 2");
  if (params.window == 0) throw InvalidArgument("window must be >= 1");

  Embedding result;
  result.vectors = NodeVectors(n, params.dim);
  result.isolated.assign(n, false);
  for (NodeId u = 0; u < n; ++u) {
    if (g.neighbors(u).empty()) {
      result.isolated[u] = true;
      ++result.isolated_count;
    }
  }

  Rng init(DeriveSeed(seed, 3));
  for (double& v : result.vectors.values) {
    v = (init.Uniform() - 0.5) / static_cast<double>(params.dim);
  }
  std::vector<double> context(n * params.dim, 0.0);

  const WalkCorpus corpus = Node2vecWalks(g, params, seed);
  std::vector<double> freq(n, 0.0);
  for (NodeId t : corpus.tokens) freq[t] += 1.0;
  for (NodeId u = 0; u < n; ++u) {
    freq[u] = result.isolated[u] ? 0.0 : std::pow(freq[u], 0.75);
  }
  const NegativeSampler sampler(freq);
  if (sampler.empty() || params.epochs == 0) return result;

  const SigmoidTable sigmoid;
  const SgdState state{params.dim,
                       result.vectors.values,
                       context,
                       sampler,
                       sigmoid,
                       params.negatives,
                       params.window,
                       params.learning_rate,
                       params.epochs * corpus.tokens.size()};
  std::atomic<std::size_t> processed{0};
  const std::uint64_t sgd_seed = DeriveSeed(seed, 4);
  const std::size_t walks = corpus.walk_count();
  if (params.deterministic || params.threads <= 1) {
    Rng rng(sgd_seed);
    TrainWalks<false>(state, corpus, 0, walks, params.epochs, rng, processed);
  } else {
    const std::size_t workers = std::min<std::size_t>(params.threads, walks);
    const std::size_t block = (walks + workers - 1) / workers;
    ParallelFor(workers, params.threads, [&](std::size_t w) {
      Rng rng(DeriveSeed(sgd_seed, w));
      const std::size_t begin = w * block;
      const std::size_t end = std::min(walks, begin + block);
      if (begin < end) {
        TrainWalks<true>(state, corpus, begin, end, params.epochs, rng, processed);
      }
    });
  }
  return result;
}

// ---------------------------------------------------------------------------
// PCA

namespace {

// Cyclic Jacobi on a small dense symmetric matrix (row-major k x k).
// Returns eigenvalues; eigenvectors are the columns of `vectors`.
std::vector<double> JacobiEigen(std::vector<double> a, std::size_t k,
                                std::vector<double>& vectors) {
  vectors.assign(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) vectors[i * k + i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      diag += a[i * k + i] * a[i * k + i];
      for (std::size_t j = i + 1; j < k; ++j) off += a[i * k + j] * a[i * k + j];
    }
    if (off <= 1e-30 * std::max(diag, 1e-300)) break;
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = p + 1; q < k; ++q) {
        const double apq = a[p * k + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * k + q] - a[p * k + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < k; ++r) {
          const double arp = a[r * k + p], arq = a[r * k + q];
          a[r * k + p] = c * arp - s * arq;
          a[r * k + q] = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < k; ++r) {
          const double apr = a[p * k + r], aqr = a[q * k + r];
          a[p * k + r] = c * apr - s * aqr;
          a[q * k + r] = s * apr + c * aqr;
        }
        for (std::size_t r = 0; r < k; ++r) {
          const double vrp = vectors[r * k + p], vrq = vectors[r * k + q];
          vectors[r * k + p] = c * vrp - s * vrq;
          vectors[r * k + q] = s * vrp + c * vrq;
        }
      }
    }
  }
  std::vector<double> values(k);
  for (std::size_t i = 0; i < k; ++i) values[i] = a[i * k + i];
  return values;
}

// Column-major block: column j is basis[j*c, (j+1)*c).
void Orthonormalize(std::vector<double>& basis, std::size_t c, std::size_t k,
                    Rng& rng) {
  for (std::size_t j = 0; j < k; ++j) {
    double* col = basis.data() + j * c;
    for (int attempt = 0;; ++attempt) {
      const double before = std::sqrt(std::inner_product(col, col + c, col, 0.0));
      // Two Gram-Schmidt passes for numerical orthogonality.
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < j; ++i) {
          const double* other = basis.data() + i * c;
          const double proj = std::inner_product(col, col + c, other, 0.0);
          for (std::size_t r = 0; r < c; ++r) col[r] -= proj * other[r];
        }
      }
      const double norm = std::sqrt(std::inner_product(col, col + c, col, 0.0));
      if (norm > 1e-10 * std::max(before, 1e-300) && norm > 1e-280) {
        for (std::size_t r = 0; r < c; ++r) col[r] /= norm;
        break;
      }
      // Column collapsed (rank-deficient input): replace with a fresh random
      // direction in the orthogonal complement.
      if (attempt > 50) throw DataError("PCA: cannot complete orthonormal basis");
      for (std::size_t r = 0; r < c; ++r) col[r] = 2.0 * rng.Uniform() - 1.0;
    }
  }
}

}  // namespace

PcaResult PcaReduce(const AttributeTable& table, std::size_t dim,
                    std::uint64_t seed) {
  const std::size_t n = table.rows();
  const std::size_t c = table.cols();
  if (dim == 0 || dim > std::min(n, c)) {
    throw InvalidArgument("PCA dim " + std::to_string(dim) +
                          " must be in [1, min(rows, columns)] = [1, " +
                          std::to_string(std::min(n, c)) + "]");
  }

  std::vector<double> centered(n * c);
  for (std::size_t col = 0; col < c; ++col) {
    double mean = 0.0;
    for (std::size_t r = 0; r < n; ++r) mean += table.at(r, col);
    mean /= static_cast<double>(n);
    for (std::size_t r = 0; r < n; ++r) centered[r * c + col] = table.at(r, col) - mean;
  }
  const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
  std::vector<double> cov(c * c, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    const double* x = centered.data() + r * c;
    for (std::size_t i = 0; i < c; ++i) {
      if (x[i] == 0.0) continue;
      for (std::size_t j = i; j < c; ++j) cov[i * c + j] += x[i] * x[j];
    }
  }
  double trace = 0.0;
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i; j < c; ++j) {
      cov[i * c + j] /= denom;
      cov[j * c + i] = cov[i * c + j];
    }
    trace += cov[i * c + i];
  }

  PcaResult result;
  result.projection = NodeVectors(n, dim);
  result.eigenvalues.assign(dim, 0.0);
  result.components.assign(dim * c, 0.0);
  if (trace <= 0.0) {
    result.warnings.push_back("PCA: attribute table has zero variance; projection is all zeros");
    for (std::size_t j = 0; j < dim; ++j) result.components[j * c + j] = 1.0;
    return result;
  }

  constexpr double kTolerance = 1e-10;
  constexpr std::size_t kMaxIterations = 10000;
  const std::size_t k = std::min(c, dim + 8);
  Rng rng(seed);
  std::vector<double> basis(c * k);  // column-major
  for (double& v : basis) v = 2.0 * rng.Uniform() - 1.0;
  Orthonormalize(basis, c, k, rng);

  auto multiply = [&](const std::vector<double>& in, std::vector<double>& out) {
    out.assign(c * k, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
      const double* v = in.data() + j * c;
      double* o = out.data() + j * c;
      for (std::size_t r = 0; r < c; ++r) {
        o[r] = std::inner_product(cov.begin() + r * c, cov.begin() + (r + 1) * c, v, 0.0);
      }
    }
  };

  std::vector<double> image, small(k * k), rot, rotated(c * k), ritz;
  for (std::size_t iter = 1; iter <= kMaxIterations; ++iter) {
    result.iterations = iter;
    multiply(basis, image);
    basis = image;
    Orthonormalize(basis, c, k, rng);
    multiply(basis, image);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        small[a * k + b] = std::inner_product(basis.begin() + a * c,
                                              basis.begin() + (a + 1) * c,
                                              image.begin() + b * c, 0.0);
      }
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        const double avg = 0.5 * (small[a * k + b] + small[b * k + a]);
        small[a * k + b] = small[b * k + a] = avg;
      }
    }
    ritz = JacobiEigen(small, k, rot);
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ritz[a] > ritz[b]; });
    std::fill(rotated.begin(), rotated.end(), 0.0);
    std::vector<double> sorted_values(k);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t src = order[j];
      sorted_values[j] = ritz[src];
      for (std::size_t i = 0; i < k; ++i) {
        const double w = rot[i * k + src];
        for (std::size_t r = 0; r < c; ++r) rotated[j * c + r] += w * basis[i * c + r];
      }
    }
    basis.swap(rotated);
    ritz = sorted_values;

    // Residual check on the wanted leading Ritz pairs.
    multiply(basis, image);
    double worst = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      double res = 0.0;
      for (std::size_t r = 0; r < c; ++r) {
        const double d = image[j * c + r] - ritz[j] * basis[j * c + r];
        res += d * d;
      }
      worst = std::max(worst, std::sqrt(res));
    }
    if (worst <= kTolerance * std::max(ritz[0], 1e-300)) break;
  }

  for (std::size_t j = 0; j < dim; ++j) {
    double* col = basis.data() + j * c;
    std::size_t arg = 0;
    for (std::size_t r = 1; r < c; ++r) {
      if (std::abs(col[r]) > std::abs(col[arg])) arg = r;
    }
    const double sign = col[arg] < 0.0 ? -1.0 : 1.0;
    for (std::size_t r = 0; r < c; ++r) result.components[j * c + r] = sign * col[r];
    result.eigenvalues[j] = std::max(0.0, ritz[j]);
  }
  for (std::size_t r = 0; r < n; ++r) {
    const double* x = centered.data() + r * c;
    for (std::size_t j = 0; j < dim; ++j) {
      result.projection.values[r * dim + j] =
          std::inner_product(x, x + c, result.components.begin() + j * c, 0.0);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Feature space

std::string_view ToString(FeatureMode mode) {
  switch (mode) {
    case FeatureMode::kNode2vec: return "node2vec";
    case FeatureMode::kAttributes: return "attributes";
    case FeatureMode::kBoth: return "both";
  }
  return "unknown";
}

FeatureMode ParseFeatureMode(std::string_view text) {
  if (text == "node2vec") return FeatureMode::kNode2vec;
  if (text == "attributes") return FeatureMode::kAttributes;
  if (text == "both") return FeatureMode::kBoth;
  throw InvalidArgument("mode: expected node2vec|attributes|both, got '" +
                        std::string(text) + "'");
}

FeatureSpace::FeatureSpace(FeatureMode mode, NodeVectors vectors)
    : mode_(mode), vectors_(std::move(vectors)) {
  if (vectors_.values.size() != vectors_.rows * vectors_.dim) {
    throw InvalidArgument("feature space: value count does not match rows x dim");
  }
  for (double v : vectors_.values) {
    if (!std::isfinite(v)) throw DataError("feature space: non-finite coordinate");
  }
}

FeatureSpace AssembleFeatures(FeatureMode mode, const NodeVectors* structural,
                              const NodeVectors* attributes) {
  switch (mode) {
    case FeatureMode::kNode2vec:
      if (structural == nullptr) throw InvalidArgument("mode node2vec needs structural vectors");
      return FeatureSpace(mode, *structural);
    case FeatureMode::kAttributes:
      if (attributes == nullptr) throw InvalidArgument("mode attributes needs attribute vectors");
      return FeatureSpace(mode, *attributes);
    case FeatureMode::kBoth: {
      if (structural == nullptr || attributes == nullptr) {
        throw InvalidArgument("mode both needs structural and attribute vectors");
      }
      if (structural->rows != attributes->rows) {
        throw InvalidArgument("structural and attribute vectors cover different node counts");
      }
      NodeVectors joined(structural->rows, structural->dim + attributes->dim);
      for (std::size_t r = 0; r < joined.rows; ++r) {
        auto s = structural->row(r);
        auto a = attributes->row(r);
        auto out = joined.row(r);
        std::copy(s.begin(), s.end(), out.begin());
        std::copy(a.begin(), a.end(), out.begin() + static_cast<std::ptrdiff_t>(s.size()));
      }
      return FeatureSpace(mode, std::move(joined));
    }
  }
  throw InvalidArgument("unknown feature mode");
}

Centroid CommunityCentroid(const FeatureSpace& fs, const Partition& p,
                           Side side) {
  Centroid sum(fs.dim(), 0.0);
  std::size_t members = 0;
  for (NodeId u = 0; u < fs.size(); ++u) {
    if (p.side(u) != side) continue;
    auto v = fs.row(u);
    for (std::size_t d = 0; d < sum.size(); ++d) sum[d] += v[d];
    ++members;
  }
  if (members == 0) throw InvalidArgument("centroid of an empty side");
  for (double& s : sum) s /= static_cast<double>(members);
  return sum;
}

std::string_view ToString(Metric metric) {
  return metric == Metric::kEuclidean ? "euclidean" : "cosine";
}

Metric ParseMetric(std::string_view text) {
  if (text == "euclidean") return Metric::kEuclidean;
  if (text == "cosine") return Metric::kCosine;
  throw InvalidArgument("metric: expected euclidean|cosine, got '" +
                        std::string(text) + "'");
}

double Distance(std::span<const double> a, std::span<const double> b,
                Metric metric) {
  if (a.size() != b.size()) {
    throw InvalidArgument("distance: vector lengths differ (" +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
  }
  if (metric == Metric::kEuclidean) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 && nb == 0.0) return 0.0;
  if (na == 0.0 || nb == 0.0) return 1.0;
  return std::clamp(1.0 - dot / (std::sqrt(na) * std::sqrt(nb)), 0.0, 2.0);
}

}  // namespace controversy
