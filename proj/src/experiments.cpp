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

#include "controversy/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "controversy/error.hpp"
#include "controversy/parallel.hpp"
#include "controversy/random.hpp"

namespace controversy {

using nlohmann::ordered_json;

Graph InjectStructuralNoise(const Graph& g, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("structural noise p must be in [0, 1]");
  const std::size_t n = g.node_count();
  if (n < 2) throw InvalidArgument("structural noise needs at least two nodes");
  constexpr int kRedraws = 10;
  std::vector<Edge> edges = g.edges();
  for (NodeId u = 0; u < n; ++u) {
    Rng rng(DeriveSeed(seed, u));
    if (!rng.Bernoulli(p)) continue;
    for (int attempt = 0; attempt <= kRedraws; ++attempt) {
      auto v = static_cast<NodeId>(rng.Below(n - 1));
      if (v >= u) ++v;
      if (!g.has_edge(u, v)) {
        edges.emplace_back(u, v);
        break;
      }
    }
  }
  Graph noisy = Graph::FromEdges(g.labels(), edges);
  if (g.attributes() != nullptr) noisy = noisy.WithAttributes(*g.attributes());
  return noisy;
}

NoisyAttributes InjectAttributeNoise(const AttributeTable& t, double p,
                                     std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("attribute noise p must be in [0, 1]");
  const std::size_t n = t.rows();
  if (n < 2) throw InvalidArgument("attribute noise needs at least two rows");
  NoisyAttributes out{t, std::vector<NodeId>(n), 0};
  for (NodeId u = 0; u < n; ++u) {
    out.donor[u] = u;
    Rng rng(DeriveSeed(seed, u));
    if (!rng.Bernoulli(p)) continue;
    auto donor = static_cast<NodeId>(rng.Below(n - 1));
    if (donor >= u) ++donor;
    auto src = t.row(donor);
    std::copy(src.begin(), src.end(), out.table.row(u).begin());
    out.donor[u] = donor;
    ++out.replaced;
  }
  return out;
}

std::string_view ToString(NoiseAxis axis) {
  switch (axis) {
    case NoiseAxis::kStructural: return "structural";
    case NoiseAxis::kAttribute: return "attribute";
    case NoiseAxis::kBoth: return "both";
  }
  return "unknown";
}

NoiseAxis ParseNoiseAxis(std::string_view text) {
  if (text == "structural") return NoiseAxis::kStructural;
  if (text == "attribute") return NoiseAxis::kAttribute;
  if (text == "both") return NoiseAxis::kBoth;
  throw InvalidArgument("axis: expected structural|attribute|both, got '" +
                        std::string(text) + "'");
}

namespace {

double ParseNumber(std::string_view text, std::string_view field) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument(std::string(field) + ": '" + std::string(text) +
                          "' is not a number");
  }
  return v;
}

// Rounds away binary noise from start + i * step.
double Snap(double x) { return std::round(x * 1e12) / 1e12; }

}  // namespace

std::vector<double> ParseLevels(std::string_view text) {
  std::vector<double> levels;
  if (text.find(':') != std::string_view::npos) {
    const auto a = text.find(':');
    const auto b = text.find(':', a + 1);
    if (b == std::string_view::npos) {
      throw InvalidArgument("levels: expected start:stop:step");
    }
    const double start = ParseNumber(text.substr(0, a), "levels");
    const double stop = ParseNumber(text.substr(a + 1, b - a - 1), "levels");
    const double step = ParseNumber(text.substr(b + 1), "levels");
    if (!(step > 0.0) || stop < start) {
      throw InvalidArgument("levels: need step > 0 and stop >= start");
    }
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      levels.push_back(Snap(start + static_cast<double>(i) * step));
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      levels.push_back(ParseNumber(text.substr(start, end - start), "levels"));
      start = end + 1;
    }
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!(levels[i] >= 0.0 && levels[i] <= 1.0)) {
      throw InvalidArgument("levels: probabilities must lie in [0, 1]");
    }
    if (i > 0 && levels[i] < levels[i - 1]) {
      throw InvalidArgument("levels: must be sorted ascending");
    }
  }
  return levels;
}

SweepRow RunSweepLevel(const Graph& g, const Partition& clean,
                       const SweepConfig& config, double level) {
  const std::uint64_t noise_seed = StreamSeed(config.base.seed, "noise");
  const bool structural = config.axis != NoiseAxis::kAttribute;
  const bool attribute = config.axis != NoiseAxis::kStructural;

  Graph noisy = structural ? InjectStructuralNoise(g, level, DeriveSeed(noise_seed, 1)) : g;
  if (attribute && noisy.attributes() != nullptr) {
    noisy = noisy.WithAttributes(
        InjectAttributeNoise(*noisy.attributes(), level, DeriveSeed(noise_seed, 2)).table);
  }
  const Partition p = config.repartition
                          ? DetectTwoCommunities(noisy, StreamSeed(config.base.seed, "partition"))
                          : clean;
  const BrwOutcome outcome = RunBrw(noisy, p, config.base);

  SweepRow row;
  row.level = level;
  row.rwpr = outcome.report.rwpr;
  row.bcrpr = outcome.report.bcrpr;
  row.average = outcome.report.average;
  row.mean_initial = outcome.energy.mean_initial();
  row.mean_loss = outcome.energy.mean_loss();
  row.boundary_count = outcome.boundary_count;
  row.edge_count = noisy.edge_count();
  row.total_walks = outcome.report.total_walks;
  row.crossed_walks = outcome.report.crossed_walks;
  return row;
}

std::vector<SweepRow> NoiseSweep(const Graph& g, const Partition& clean,
                                 const SweepConfig& config) {
  if (!std::is_sorted(config.levels.begin(), config.levels.end())) {
    throw InvalidArgument("levels: must be sorted ascending");
  }
  std::vector<SweepRow> rows(config.levels.size());
  // Levels run side by side; each level is single-threaded inside, which
  // gives the same numbers as any other split of the workers.
  SweepConfig inner = config;
  const bool level_parallel = config.base.threads > 1 && config.levels.size() > 1;
  if (level_parallel) inner.base.threads = 1;
  ParallelFor(rows.size(), level_parallel ? config.base.threads : 1, [&](std::size_t i) {
    rows[i] = RunSweepLevel(g, clean, inner, config.levels[i]);
  });
  return rows;
}

// ---------------------------------------------------------------------------
// Documents

namespace {

ordered_json OptionalNumber(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::optional<double> OptionalFrom(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

ordered_json ReportEnvelope(std::string_view kind) {
  ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["schema_version"] = kReportSchemaVersion;
  doc["kind"] = kind;
  return doc;
}

ordered_json ToJson(const SweepRow& row) {
  ordered_json j;
  j["level"] = row.level;
  j["rwpr"] = row.rwpr;
  j["bcrpr"] = OptionalNumber(row.bcrpr);
  j["average"] = OptionalNumber(row.average);
  j["mean_initial_energy"] = row.mean_initial;
  j["mean_loss_energy"] = row.mean_loss;
  j["boundary_nodes"] = row.boundary_count;
  j["edges"] = row.edge_count;
  j["total_walks"] = row.total_walks;
  j["crossed_walks"] = row.crossed_walks;
  return j;
}

SweepRow SweepRowFromJson(const ordered_json& j) {
  try {
    SweepRow row;
    row.level = j.at("level").get<double>();
    row.rwpr = j.at("rwpr").get<double>();
    row.bcrpr = OptionalFrom(j.at("bcrpr"));
    row.average = OptionalFrom(j.at("average"));
    row.mean_initial = j.at("mean_initial_energy").get<double>();
    row.mean_loss = j.at("mean_loss_energy").get<double>();
    row.boundary_count = j.at("boundary_nodes").get<std::size_t>();
    row.edge_count = j.at("edges").get<std::size_t>();
    row.total_walks = j.at("total_walks").get<std::size_t>();
    row.crossed_walks = j.at("crossed_walks").get<std::size_t>();
    return row;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("sweep row: ") + e.what());
  }
}

ordered_json PipelineConfigJson(const PipelineConfig& c) {
  ordered_json j;
  j["seed"] = c.seed;
  j["mode"] = ToString(c.mode);
  j["dims"] = c.dims;
  j["struct_dims"] = c.structural_dims();
  j["attr_dims"] = c.attribute_dims();
  j["walks"] = c.walks_per_node;
  j["step_cap"] = c.step_cap;
  j["energy_mode"] = ToString(c.energy.mode);
  j["multiplier"] = c.energy.multiplier;
  j["alpha"] = c.energy.weights.alpha;
  j["beta"] = c.energy.weights.beta;
  j["gamma"] = c.energy.weights.gamma;
  j["metric"] = ToString(c.energy.metric);
  if (c.mode != FeatureMode::kAttributes) {
    ordered_json n2v;
    n2v["walks_per_node"] = c.node2vec.walks_per_node;
    n2v["walk_length"] = c.node2vec.walk_length;
    n2v["window"] = c.node2vec.window;
    n2v["p"] = c.node2vec.p;
    n2v["q"] = c.node2vec.q;
    n2v["epochs"] = c.node2vec.epochs;
    n2v["negatives"] = c.node2vec.negatives;
    n2v["learning_rate"] = c.node2vec.learning_rate;
    n2v["deterministic"] = c.node2vec.deterministic;
    j["node2vec"] = n2v;
  }
  return j;
}

ordered_json SweepConfigJson(const SweepConfig& config) {
  ordered_json j = PipelineConfigJson(config.base);
  j["axis"] = ToString(config.axis);
  j["levels"] = config.levels;
  j["repartition"] = config.repartition;
  return j;
}

ordered_json SweepDocument(const SweepConfig& config,
                           const std::vector<SweepRow>& rows) {
  ordered_json doc = ReportEnvelope("sweep");
  doc["config"] = SweepConfigJson(config);
  ordered_json array = ordered_json::array();
  for (const SweepRow& row : rows) array.push_back(ToJson(row));
  doc["rows"] = std::move(array);
  return doc;
}

std::vector<SweepRow> SweepRowsFromDocument(const ordered_json& doc) {
  if (!doc.contains("rows") || !doc["rows"].is_array()) {
    throw ParseError("sweep document has no rows array");
  }
  std::vector<SweepRow> rows;
  for (const auto& j : doc["rows"]) rows.push_back(SweepRowFromJson(j));
  return rows;
}

std::string Serialize(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json ParseReport(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  if (!doc.is_object() || doc.value("schema", "") != kReportSchema) {
    throw ParseError("report: missing or foreign schema tag");
  }
  if (doc.value("schema_version", 0) != kReportSchemaVersion) {
    throw ParseError("report: unsupported schema_version");
  }
  return doc;
}

void WriteReport(const ordered_json& doc, const std::string& path) {
  WriteFile(path, Serialize(doc));
}

ordered_json ReadReport(const std::string& path) {
  return ParseReport(ReadFile(path));
}

}  // namespace controversy
