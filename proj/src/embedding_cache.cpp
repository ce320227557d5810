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

#include <bit>
#include <charconv>
#include <cstring>
#include <filesystem>
#include <system_error>

#include "controversy/error.hpp"
#include "controversy/features.hpp"
#include "controversy/random.hpp"

namespace controversy {
namespace {

constexpr char kMagic[8] = {'C', 'L', 'E', 'M', 'B', 'E', 'D', '1'};
constexpr std::size_t kHeaderBytes = 8 + 8 + 8 + 4 + 4 + 8 + 8;

void PutLe(std::string& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t GetLe(std::string_view in, std::size_t offset, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) {
    v |= std::uint64_t{static_cast<unsigned char>(in[offset + i])} << (8 * i);
  }
  return v;
}

void AppendDouble(std::string& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, ptr);
}

}  // namespace

std::string EncodeEmbedding(const NodeVectors& vectors, FeatureMode mode,
                            std::uint64_t seed, std::uint64_t key) {
  std::string out(kMagic, sizeof(kMagic));
  out.reserve(kHeaderBytes + vectors.values.size() * 8);
  PutLe(out, vectors.rows, 8);
  PutLe(out, vectors.dim, 8);
  PutLe(out, static_cast<std::uint64_t>(mode), 4);
  PutLe(out, 0, 4);
  PutLe(out, seed, 8);
  PutLe(out, key, 8);
  for (double v : vectors.values) PutLe(out, std::bit_cast<std::uint64_t>(v), 8);
  return out;
}

CachedEmbedding DecodeEmbedding(std::string_view bytes) {
  if (bytes.size() < kHeaderBytes || std::memcmp(bytes.data(), kMagic, 8) != 0) {
    throw ParseError("embedding cache: bad magic or truncated header");
  }
  CachedEmbedding out;
  const std::uint64_t rows = GetLe(bytes, 8, 8);
  const std::uint64_t dim = GetLe(bytes, 16, 8);
  const std::uint64_t mode = GetLe(bytes, 24, 4);
  if (mode > static_cast<std::uint64_t>(FeatureMode::kBoth)) {
    throw ParseError("embedding cache: unknown mode tag");
  }
  out.mode = static_cast<FeatureMode>(mode);
  out.seed = GetLe(bytes, 32, 8);
  out.key = GetLe(bytes, 40, 8);
  if (dim != 0 && rows > (bytes.size() - kHeaderBytes) / 8 / dim) {
    throw ParseError("embedding cache: payload shorter than header claims");
  }
  if (bytes.size() != kHeaderBytes + rows * dim * 8) {
    throw ParseError("embedding cache: payload size mismatch");
  }
  out.vectors = NodeVectors(rows, dim);
  for (std::size_t i = 0; i < out.vectors.values.size(); ++i) {
    out.vectors.values[i] = std::bit_cast<double>(GetLe(bytes, kHeaderBytes + 8 * i, 8));
  }
  return out;
}

std::string EmbeddingText(const Graph& g, const NodeVectors& vectors) {
  std::string out;
  for (std::size_t r = 0; r < vectors.rows; ++r) {
    out += g.label(static_cast<NodeId>(r));
    for (double v : vectors.row(r)) {
      out += ' ';
      AppendDouble(out, v);
    }
    out += '\n';
  }
  return out;
}

std::uint64_t EmbeddingCacheKey(const Graph& g, const Node2vecParams& params,
                                std::uint64_t seed) {
  std::uint64_t h = Fingerprint(g);
  for (std::uint64_t x :
       {std::uint64_t{params.dim}, std::uint64_t{params.walks_per_node},
        std::uint64_t{params.walk_length}, std::uint64_t{params.window},
        std::bit_cast<std::uint64_t>(params.p), std::bit_cast<std::uint64_t>(params.q),
        std::uint64_t{params.epochs}, std::uint64_t{params.negatives},
        std::bit_cast<std::uint64_t>(params.learning_rate), seed}) {
    h = SplitMix64(h ^ x);
  }
  return h;
}

Embedding CachedNode2vecEmbed(const Graph& g, const Node2vecParams& params,
                              std::uint64_t seed, const std::string& cache_dir) {
  // Non-deterministic training is never cached.
  if (cache_dir.empty() || (!params.deterministic && params.threads > 1)) {
    return Node2vecEmbed(g, params, seed);
  }
  const std::uint64_t key = EmbeddingCacheKey(g, params, seed);
  char name[32];
  auto [ptr, ec] = std::to_chars(name, name + sizeof(name), key, 16);
  const std::filesystem::path path =
      std::filesystem::path(cache_dir) / (std::string(name, ptr) + ".emb");

  std::error_code exists_ec;
  if (std::filesystem::exists(path, exists_ec)) {
    try {
      CachedEmbedding cached = DecodeEmbedding(ReadFile(path.string()));
      if (cached.key == key && cached.seed == seed &&
          cached.vectors.rows == g.node_count() && cached.vectors.dim == params.dim) {
        Embedding e;
        e.vectors = std::move(cached.vectors);
        e.isolated.assign(g.node_count(), false);
        for (NodeId u = 0; u < g.node_count(); ++u) {
          if (g.neighbors(u).empty()) {
            e.isolated[u] = true;
            ++e.isolated_count;
          }
        }
        return e;
      }
    } catch (const Error&) {
      // Corrupt or stale entry: retrain and overwrite.
    }
  }
  Embedding e = Node2vecEmbed(g, params, seed);
  std::filesystem::create_directories(cache_dir);
  WriteFile(path.string(), EncodeEmbedding(e.vectors, FeatureMode::kNode2vec, seed, key));
  return e;
}

}  // namespace controversy
