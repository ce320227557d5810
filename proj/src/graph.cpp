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

#include "controversy/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "controversy/error.hpp"
#include "controversy/random.hpp"

namespace controversy {
namespace {

// Builds CSR offsets/targets from (row, col) pairs; rows sorted and deduped.
void BuildCsr(std::size_t n, std::vector<Edge> pairs,
              std::vector<std::size_t>& offsets, std::vector<NodeId>& targets) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  offsets.assign(n + 1, 0);
  for (const auto& [u, v] : pairs) ++offsets[u + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  targets.resize(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) targets[i] = pairs[i].second;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> Split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

AttributeTable::AttributeTable(std::vector<std::string> columns,
                               std::size_t rows)
    : columns_(std::move(columns)),
      rows_(rows),
      values_(rows * columns_.size(), 0.0) {}

AttributeTable AttributeTable::SelectRows(std::span<const NodeId> rows) const {
  AttributeTable out(columns_, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto src = row(rows[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

Graph Graph::FromEdges(std::vector<std::string> labels,
                       std::span<const Edge> edges) {
  Graph g;
  const std::size_t n = labels.size();
  auto index = std::make_shared<std::unordered_map<std::string, NodeId>>();
  index->reserve(n);
  for (NodeId i = 0; i < n; ++i) {
    if (!index->emplace(labels[i], i).second) {
      throw InvalidArgument("duplicate node label '" + labels[i] + "'");
    }
  }
  g.labels_ = std::move(labels);
  g.index_ = std::move(index);

  std::vector<Edge> out, in, und;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
    if (u == v) continue;
    out.emplace_back(u, v);
  }
  in.reserve(out.size());
  und.reserve(2 * out.size());
  for (const auto& [u, v] : out) {
    in.emplace_back(v, u);
    und.emplace_back(u, v);
    und.emplace_back(v, u);
  }
  BuildCsr(n, std::move(out), g.out_offsets_, g.out_targets_);
  BuildCsr(n, std::move(in), g.in_offsets_, g.in_sources_);
  BuildCsr(n, std::move(und), g.und_offsets_, g.und_targets_);
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto nb = out_neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::adjacent(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  if (!index_) return std::nullopt;
  auto it = index_->find(std::string(label));
  if (it == index_->end()) return std::nullopt;
  return it->second;
}

Graph Graph::WithAttributes(AttributeTable table) const {
  if (table.rows() != node_count()) {
    throw InvalidArgument("attribute table has " + std::to_string(table.rows()) +
                          " rows, graph has " + std::to_string(node_count()) +
                          " nodes");
  }
  Graph g = *this;
  g.attributes_ = std::make_shared<const AttributeTable>(std::move(table));
  return g;
}

Graph Graph::WithoutAttributes() const {
  Graph g = *this;
  g.attributes_.reset();
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : out_neighbors(u)) out.emplace_back(u, v);
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.labels_ != b.labels_ || a.out_offsets_ != b.out_offsets_ ||
      a.out_targets_ != b.out_targets_) {
    return false;
  }
  const AttributeTable* ta = a.attributes();
  const AttributeTable* tb = b.attributes();
  if ((ta == nullptr) != (tb == nullptr)) return false;
  return ta == nullptr || *ta == *tb;
}

Graph LoadEdgeList(std::string_view text, bool reverse_edges) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view token) {
    auto [it, inserted] =
        ids.emplace(std::string(token), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };
  const auto lines = SplitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (Trim(line).empty() || line.front() == '#') continue;
    auto tokens = Split(line, '\t');
    if (tokens.size() != 2 || tokens[0].empty() || tokens[1].empty()) {
      throw ParseError("edge list line " + std::to_string(i + 1) +
                       ": expected 'src<TAB>dst', found " +
                       std::to_string(tokens.size()) + " field(s)");
    }
    NodeId u = intern(tokens[0]);
    NodeId v = intern(tokens[1]);
    edges.push_back(reverse_edges ? Edge{v, u} : Edge{u, v});
  }
  return Graph::FromEdges(std::move(labels), edges);
}

Graph LoadEdgeListFile(const std::string& path, bool reverse_edges) {
  return LoadEdgeList(ReadFile(path), reverse_edges);
}

std::string WriteEdgeList(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += g.label(u);
    out += '\t';
    out += g.label(v);
    out += '\n';
  }
  return out;
}

LoadedAttributes LoadAttributeTable(std::string_view text, const Graph& g) {
  const auto lines = SplitLines(text);
  std::size_t first = 0;
  while (first < lines.size() && Trim(lines[first]).empty()) ++first;
  if (first == lines.size()) throw ParseError("attribute table: missing header");

  auto header = Split(lines[first], ',');
  if (header.size() < 2) {
    throw ParseError("attribute table: header needs 'node' plus at least one column");
  }
  std::vector<std::string> columns;
  for (std::size_t c = 1; c < header.size(); ++c) {
    columns.emplace_back(Trim(header[c]));
  }

  LoadedAttributes result{AttributeTable(columns, g.node_count()), {}};
  std::vector<bool> seen(g.node_count(), false);
  for (std::size_t i = first + 1; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    const std::string where = "attribute table line " + std::to_string(i + 1);
    auto cells = Split(lines[i], ',');
    if (cells.size() != header.size()) {
      throw ParseError(where + ": expected " + std::to_string(header.size()) +
                       " cells, found " + std::to_string(cells.size()));
    }
    std::string_view label = Trim(cells[0]);
    auto node = g.find(label);
    if (!node) {
      result.warnings.push_back(where + ": node '" + std::string(label) +
                                "' not in graph; row skipped");
      continue;
    }
    if (seen[*node]) {
      throw ParseError(where + ": duplicate row for node '" +
                       std::string(label) + "'");
    }
    seen[*node] = true;
    for (std::size_t c = 1; c < cells.size(); ++c) {
      std::string_view cell = Trim(cells[c]);
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw ParseError(where + ", column '" + columns[c - 1] +
                         "': non-numeric value '" + std::string(cell) + "'");
      }
      if (value < 0.0) {
        throw ParseError(where + ", column '" + columns[c - 1] +
                         "': negative value");
      }
      result.table.at(*node, c - 1) = value;
    }
  }
  return result;
}

LoadedAttributes LoadAttributeTableFile(const std::string& path,
                                        const Graph& g) {
  return LoadAttributeTable(ReadFile(path), g);
}

namespace {

// Component id per node (undirected view), numbered in order of smallest id.
std::vector<std::uint32_t> WeakComponents(const Graph& g, std::size_t& count) {
  const std::size_t n = g.node_count();
  constexpr std::uint32_t kUnset = ~0u;
  std::vector<std::uint32_t> comp(n, kUnset);
  std::vector<NodeId> stack;
  count = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(count++);
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (comp[v] == kUnset) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
  }
  return comp;
}

}  // namespace

bool IsWeaklyConnected(const Graph& g) {
  std::size_t count = 0;
  WeakComponents(g, count);
  return count <= 1;
}

Graph LargestWeaklyConnectedComponent(const Graph& g) {
  if (g.node_count() == 0) throw DataError("largest component of an empty graph");
  std::size_t count = 0;
  auto comp = WeakComponents(g, count);
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  // Components are numbered by their smallest member, so the first maximum
  // is the tie-break winner.
  const auto best = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> keep;
  keep.reserve(sizes[best]);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (comp[u] == best) keep.push_back(u);
  }
  return InducedSubgraph(g, keep);
}

Graph InducedSubgraph(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<NodeId> keep(nodes.begin(), nodes.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (!keep.empty() && keep.back() >= g.node_count()) {
    throw InvalidArgument("induced subgraph: unknown node id " +
                          std::to_string(keep.back()));
  }
  constexpr NodeId kDropped = ~NodeId{0};
  std::vector<NodeId> remap(g.node_count(), kDropped);
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (NodeId i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = i;
    labels.push_back(g.label(keep[i]));
  }
  std::vector<Edge> edges;
  for (NodeId u : keep) {
    for (NodeId v : g.out_neighbors(u)) {
      if (remap[v] != kDropped) edges.emplace_back(remap[u], remap[v]);
    }
  }
  Graph sub = Graph::FromEdges(std::move(labels), edges);
  if (g.attributes() != nullptr) {
    sub = sub.WithAttributes(g.attributes()->SelectRows(keep));
  }
  return sub;
}

std::vector<NodeId> SampleNodes(std::size_t n, double fraction,
                                std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw InvalidArgument("sample fraction must be in (0, 1]");
  }
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  const auto k = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  Rng rng(seed);
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < k && i + 1 < n; ++i) {
    std::size_t j = i + rng.Below(n - i);
    std::swap(ids[i], ids[j]);
  }
  ids.resize(k);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::uint64_t Fingerprint(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) { h = SplitMix64(h ^ x); };
  mix(g.node_count());
  for (const auto& label : g.labels()) {
    for (unsigned char c : label) mix(c);
    mix(0xffu);
  }
  for (const auto& [u, v] : g.edges()) mix((std::uint64_t{u} << 32) | v);
  return h;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace controversy
