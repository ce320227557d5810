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

#include "controversy/command.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "controversy/baselines.hpp"
#include "controversy/brw.hpp"
#include "controversy/error.hpp"
#include "controversy/experiments.hpp"
#include "controversy/features.hpp"
#include "controversy/graph.hpp"
#include "controversy/partition.hpp"
#include "controversy/pipeline.hpp"
#include "controversy/random.hpp"
#include "controversy/topology.hpp"

namespace controversy {

using nlohmann::ordered_json;

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

void AppendDouble(std::string& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, ptr);
}

}  // namespace

// ---------------------------------------------------------------------------
// RunConfig

const std::vector<std::string_view>& RunConfig::KnownKeys() {
  static const std::vector<std::string_view> keys = {
      "edges", "attributes", "partition", "reverse-edges", "lcc", "sample",
      "mode", "dims", "struct-dims", "attr-dims",
      "n2v-walks", "n2v-length", "n2v-window", "n2v-p", "n2v-q",
      "n2v-epochs", "n2v-negatives", "n2v-lr", "deterministic",
      "energy-mode", "multiplier", "alpha", "beta", "gamma", "metric",
      "walks", "step-cap", "seed", "threads",
      "output", "walks-out", "text-out", "cache-dir",
      "rwc-k", "rwc-repeats", "axis", "levels", "repartition", "input"};
  return keys;
}

void RunConfig::Set(std::string_view key, std::string_view value) {
  const auto& known = KnownKeys();
  if (std::find(known.begin(), known.end(), key) == known.end()) {
    throw InvalidArgument("unknown configuration key '" + std::string(key) + "'");
  }
  values_[std::string(key)] = std::string(value);
}

void RunConfig::Unset(std::string_view key) {
  auto it = values_.find(key);
  if (it != values_.end()) values_.erase(it);
}

void RunConfig::LoadText(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("config line " + std::to_string(line_no) +
                            ": expected 'key = value'");
    }
    Set(Trim(line.substr(0, eq)), Trim(line.substr(eq + 1)));
  }
}

void RunConfig::LoadFile(const std::string& path) { LoadText(ReadFile(path)); }

bool RunConfig::Has(std::string_view key) const {
  return values_.find(key) != values_.end();
}

std::string RunConfig::String(std::string_view key, std::string_view fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? std::string(fallback) : it->second;
}

double RunConfig::Number(std::string_view key, double fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& s = it->second;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw InvalidArgument(std::string(key) + ": '" + s + "' is not a finite number");
  }
  return v;
}

std::size_t RunConfig::Count(std::string_view key, std::size_t fallback,
                             std::size_t min) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& s = it->second;
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument(std::string(key) + ": '" + s + "' is not a non-negative integer");
  }
  if (v < min) {
    throw InvalidArgument(std::string(key) + ": must be >= " + std::to_string(min));
  }
  return v;
}

std::uint64_t RunConfig::Seed(std::string_view key, std::uint64_t fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& s = it->second;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument(std::string(key) + ": '" + s + "' is not an unsigned integer");
  }
  return v;
}

bool RunConfig::Flag(std::string_view key, bool fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& s = it->second;
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off") return false;
  throw InvalidArgument(std::string(key) + ": '" + s + "' is not a boolean");
}

const std::vector<std::string_view>& Commands() {
  static const std::vector<std::string_view> commands = {
      "partition", "levels", "embed", "energy", "brw",
      "rwc", "guerra", "sweep", "report"};
  return commands;
}

unsigned ResolveThreads(const RunConfig& config) {
  if (config.Has("threads")) {
    return static_cast<unsigned>(config.Count("threads", 1, 1));
  }
  if (const char* env = std::getenv("CONTROVERSY_LAB_THREADS"); env != nullptr && *env) {
    RunConfig tmp;
    tmp.Set("threads", env);
    try {
      return static_cast<unsigned>(tmp.Count("threads", 1, 1));
    } catch (const Error&) {
      throw InvalidArgument("CONTROVERSY_LAB_THREADS: '" + std::string(env) +
                            "' is not a positive integer");
    }
  }
  return 1;
}

// ---------------------------------------------------------------------------
// Commands

namespace {

struct Inputs {
  Graph loaded;  // before sampling and component extraction
  Graph graph;
  ordered_json echo;
  std::vector<std::string> warnings;
};

Inputs LoadInputs(const RunConfig& config) {
  if (!config.Has("edges")) throw InvalidArgument("edges: an edge list is required");
  Inputs in;
  const std::string edges_path = config.String("edges");
  const bool reverse = config.Flag("reverse-edges", false);
  const bool lcc = config.Flag("lcc", true);
  const double sample = config.Number("sample", 1.0);
  if (!(sample > 0.0 && sample <= 1.0)) throw InvalidArgument("sample: must be in (0, 1]");

  Graph g = LoadEdgeListFile(edges_path, reverse);
  in.echo["edges"] = edges_path;
  in.echo["reverse_edges"] = reverse;
  in.echo["loaded_nodes"] = g.node_count();
  in.echo["loaded_edges"] = g.edge_count();
  if (config.Has("attributes")) {
    LoadedAttributes attrs = LoadAttributeTableFile(config.String("attributes"), g);
    in.warnings = std::move(attrs.warnings);
    g = g.WithAttributes(std::move(attrs.table));
    in.echo["attributes"] = config.String("attributes");
  }
  in.loaded = g;
  if (sample < 1.0) {
    const std::uint64_t seed = StreamSeed(config.Seed("seed", 0), "sample");
    g = InducedSubgraph(g, SampleNodes(g.node_count(), sample, seed));
    in.echo["sample"] = sample;
  }
  if (lcc) g = LargestWeaklyConnectedComponent(g);
  in.echo["lcc"] = lcc;
  in.echo["nodes"] = g.node_count();
  in.echo["edges_used"] = g.edge_count();
  in.graph = std::move(g);
  return in;
}

// Loaded partition (restricted to the preprocessed graph) or spectral
// bisection.
Partition ObtainPartition(const RunConfig& config, Inputs& in) {
  const Graph& g = in.graph;
  ordered_json& echo = in.echo;
  if (config.Has("partition")) {
    const std::string path = config.String("partition");
    // Validated against every loaded node, then restricted to the nodes
    // that survived sampling and component extraction.
    const Partition full = LoadPartitionFile(path, in.loaded);
    std::vector<Side> sides(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
      sides[u] = full.side(*in.loaded.find(g.label(u)));
    }
    echo["partition"] = path;
    return Partition(std::move(sides)).Canonical();
  }
  echo["partition"] = "spectral";
  return DetectTwoCommunities(g, StreamSeed(config.Seed("seed", 0), "partition"));
}

PipelineConfig MakePipelineConfig(const RunConfig& config) {
  PipelineConfig pc;
  pc.mode = ParseFeatureMode(config.String("mode", "node2vec"));
  pc.dims = config.Count("dims", 20, 1);
  if (config.Has("struct-dims")) pc.struct_dims = config.Count("struct-dims", 0, 2);
  if (config.Has("attr-dims")) pc.attr_dims = config.Count("attr-dims", 0, 1);
  if (pc.mode == FeatureMode::kBoth) {
    if (pc.structural_dims() < 2) throw InvalidArgument("struct-dims: must be >= 2 in mode both");
    if (pc.attribute_dims() < 1) throw InvalidArgument("attr-dims: must be >= 1 in mode both");
    if (pc.struct_dims && pc.attr_dims && *pc.struct_dims + *pc.attr_dims != pc.dims &&
        config.Has("dims")) {
      throw InvalidArgument("dims: must equal struct-dims + attr-dims");
    }
    if (pc.struct_dims && pc.attr_dims) pc.dims = *pc.struct_dims + *pc.attr_dims;
  } else if (pc.mode == FeatureMode::kNode2vec && pc.dims < 2) {
    throw InvalidArgument("dims: node2vec needs at least 2 dimensions");
  }
  if (pc.mode != FeatureMode::kNode2vec && !config.Has("attributes")) {
    throw InvalidArgument("attributes: required by mode " + std::string(ToString(pc.mode)));
  }
  pc.node2vec.walks_per_node = config.Count("n2v-walks", 10, 1);
  pc.node2vec.walk_length = config.Count("n2v-length", 80, 1);
  pc.node2vec.window = config.Count("n2v-window", 10, 1);
  pc.node2vec.p = config.Number("n2v-p", 1.0);
  pc.node2vec.q = config.Number("n2v-q", 1.0);
  if (!(pc.node2vec.p > 0.0)) throw InvalidArgument("n2v-p: must be positive");
  if (!(pc.node2vec.q > 0.0)) throw InvalidArgument("n2v-q: must be positive");
  pc.node2vec.epochs = config.Count("n2v-epochs", 5, 0);
  pc.node2vec.negatives = config.Count("n2v-negatives", 5, 0);
  pc.node2vec.learning_rate = config.Number("n2v-lr", 0.025);
  if (!(pc.node2vec.learning_rate > 0.0)) throw InvalidArgument("n2v-lr: must be positive");
  pc.node2vec.deterministic = config.Flag("deterministic", true);

  pc.energy.mode = ParseLossMode(config.String("energy-mode", "full"));
  pc.energy.multiplier = config.Number("multiplier", 1.0);
  if (!(pc.energy.multiplier > 0.0)) throw InvalidArgument("multiplier: must be positive");
  pc.energy.weights.alpha = config.Number("alpha", 1.0);
  pc.energy.weights.beta = config.Number("beta", 1.0);
  pc.energy.weights.gamma = config.Number("gamma", 1.0);
  pc.energy.metric = ParseMetric(config.String("metric", "euclidean"));
  pc.walks_per_node = config.Count("walks", 50, 1);
  pc.step_cap = static_cast<std::uint32_t>(config.Count("step-cap", kDefaultStepCap, 1));
  pc.seed = config.Seed("seed", 0);
  pc.threads = ResolveThreads(config);
  pc.cache_dir = config.String("cache-dir");
  return pc;
}

ordered_json ReportJson(const ControversyReport& r) {
  ordered_json j;
  j["rwpr"] = r.rwpr;
  j["bcrpr"] = r.bcrpr ? ordered_json(*r.bcrpr) : ordered_json(nullptr);
  j["average"] = r.average ? ordered_json(*r.average) : ordered_json(nullptr);
  j["total_walks"] = r.total_walks;
  j["crossed_walks"] = r.crossed_walks;
  j["total_steps"] = r.total_steps;
  ordered_json t;
  for (const auto& [k, v] : r.terminations) t[k] = v;
  j["terminations"] = t;
  return j;
}

std::string CommandPartition(const RunConfig& config) {
  Inputs in = LoadInputs(config);
  Partition p = ObtainPartition(config, in);
  return WritePartition(in.graph, p);
}

std::string CommandLevels(const RunConfig& config) {
  Inputs in = LoadInputs(config);
  Partition p = ObtainPartition(config, in);
  const LevelMap levels = AssignLevels(in.graph, p);
  std::string out = "node,side,level,conductance\n";
  for (NodeId u = 0; u < in.graph.node_count(); ++u) {
    out += in.graph.label(u);
    out += p.side(u) == Side::kX ? ",0," : ",1,";
    out += std::to_string(levels.level[u]);
    out += ',';
    AppendDouble(out, NodeConductance(in.graph, p, u));
    out += '\n';
  }
  return out;
}

std::string CommandEnergy(const RunConfig& config) {
  Inputs in = LoadInputs(config);
  Partition p = ObtainPartition(config, in);
  const PipelineConfig pc = MakePipelineConfig(config);
  const BuiltFeatures features = BuildFeatures(in.graph, pc);
  const LevelMap levels = AssignLevels(in.graph, p);
  const EnergyAssignment ea = AssignEnergies(in.graph, features.space, p, levels, pc.energy);
  std::string out = "node,initial,loss\n";
  for (NodeId u = 0; u < in.graph.node_count(); ++u) {
    out += in.graph.label(u);
    out += ',';
    AppendDouble(out, ea.initial[u]);
    out += ',';
    AppendDouble(out, ea.loss[u]);
    out += '\n';
  }
  return out;
}

std::string CommandEmbed(const RunConfig& config, std::string& binary) {
  if (!config.Has("output")) {
    throw InvalidArgument("output: embed writes a binary embedding file and needs a path");
  }
  Inputs in = LoadInputs(config);
  const PipelineConfig pc = MakePipelineConfig(config);
  const BuiltFeatures features = BuildFeatures(in.graph, pc);
  const std::uint64_t seed = StreamSeed(pc.seed, "embed");
  Node2vecParams params = pc.node2vec;
  params.dim = pc.structural_dims();
  const std::uint64_t key = pc.mode == FeatureMode::kAttributes
                                ? Fingerprint(in.graph)
                                : EmbeddingCacheKey(in.graph, params, seed);
  binary = EncodeEmbedding(features.space.vectors(), pc.mode, seed, key);
  if (config.Has("text-out")) {
    WriteFile(config.String("text-out"), EmbeddingText(in.graph, features.space.vectors()));
  }
  ordered_json doc = ReportEnvelope("embed");
  doc["input"] = in.echo;
  doc["config"] = PipelineConfigJson(pc);
  doc["nodes"] = features.space.size();
  doc["dim"] = features.space.dim();
  doc["isolated_nodes"] = features.isolated_nodes;
  doc["warnings"] = features.warnings;
  return Serialize(doc);
}

std::string CommandBrw(const RunConfig& config) {
  Inputs in = LoadInputs(config);
  Partition p = ObtainPartition(config, in);
  const PipelineConfig pc = MakePipelineConfig(config);
  const BrwOutcome outcome = RunBrw(in.graph, p, pc);
  if (config.Has("walks-out")) {
    WriteFile(config.String("walks-out"), WalkRecordsCsv(in.graph, outcome.records));
  }
  ordered_json doc = ReportEnvelope("brw");
  doc["input"] = in.echo;
  doc["config"] = PipelineConfigJson(pc);
  ordered_json structure;
  structure["side_sizes"] = {p.count(Side::kX), p.count(Side::kY)};
  structure["cut_edges"] = CutSize(in.graph, p);
  structure["boundary_nodes"] = outcome.boundary_count;
  structure["max_level"] = {outcome.levels.max(Side::kX), outcome.levels.max(Side::kY)};
  structure["isolated_community"] = {outcome.levels.isolated_community[0],
                                     outcome.levels.isolated_community[1]};
  doc["structure"] = structure;
  ordered_json result = ReportJson(outcome.report);
  result["mean_initial_energy"] = outcome.energy.mean_initial();
  result["mean_loss_energy"] = outcome.energy.mean_loss();
  doc["result"] = result;
  std::vector<std::string> warnings = in.warnings;
  warnings.insert(warnings.end(), outcome.warnings.begin(), outcome.warnings.end());
  doc["warnings"] = warnings;
  return Serialize(doc);
}

std::string CommandRwc(const RunConfig& config) {
  Inputs in = LoadInputs(config);
  Partition p = ObtainPartition(config, in);
  RwcConfig rc;
  rc.k = config.Count("rwc-k", 10, 1);
  rc.repeats = config.Count("rwc-repeats", 100, 1);
  rc.seed = StreamSeed(config.Seed("seed", 0), "rwc");
  rc.threads = ResolveThreads(config);
  const RwcResult r = RandomWalkControversy(in.graph, p, rc);
  ordered_json doc = ReportEnvelope("rwc");
  doc["input"] = in.echo;
  doc["config"] = {{"seed", config.Seed("seed", 0)}, {"k", rc.k}, {"repeats", rc.repeats}};
  ordered_json result;
  result["rwc"] = r.score;
  result["p_xx"] = r.p[0][0];
  result["p_xy"] = r.p[0][1];
  result["p_yx"] = r.p[1][0];
  result["p_yy"] = r.p[1][1];
  result["abandoned_walks"] = r.abandoned;
  doc["result"] = result;
  return Serialize(doc);
}

std::string CommandGuerra(const RunConfig& config) {
  Inputs in = LoadInputs(config);
  Partition p = ObtainPartition(config, in);
  ordered_json doc = ReportEnvelope("guerra");
  doc["input"] = in.echo;
  doc["config"] = {{"seed", config.Seed("seed", 0)}};
  doc["result"] = {{"polarity", GuerraPolarity(in.graph, p)},
                   {"boundary_nodes", BoundaryNodes(in.graph, p).total()}};
  return Serialize(doc);
}

std::string CommandSweep(const RunConfig& config) {
  Inputs in = LoadInputs(config);
  Partition p = ObtainPartition(config, in);
  SweepConfig sc;
  sc.base = MakePipelineConfig(config);
  sc.axis = ParseNoiseAxis(config.String("axis", "structural"));
  if (config.Has("levels")) sc.levels = ParseLevels(config.String("levels"));
  sc.repartition = config.Flag("repartition", false);
  if (sc.axis != NoiseAxis::kStructural && !config.Has("attributes")) {
    throw InvalidArgument("attributes: axis " + std::string(ToString(sc.axis)) +
                          " needs an attribute table");
  }
  const auto rows = NoiseSweep(in.graph, p, sc);
  ordered_json doc = SweepDocument(sc, rows);
  doc["input"] = in.echo;
  doc["warnings"] = in.warnings;
  return Serialize(doc);
}

// Plottable TSV view of any stored report.
std::string CommandReport(const RunConfig& config) {
  if (!config.Has("input")) throw InvalidArgument("input: a report file is required");
  const ordered_json doc = ReadReport(config.String("input"));
  const std::string kind = doc.value("kind", "");
  std::string out;
  auto cell = [](const ordered_json& v) {
    if (v.is_null()) return std::string("NA");
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  if (kind == "sweep") {
    const auto rows = SweepRowsFromDocument(doc);
    out = "level\trwpr\tbcrpr\taverage\tmean_initial_energy\tmean_loss_energy\t"
          "boundary_nodes\tedges\ttotal_walks\tcrossed_walks\n";
    for (const SweepRow& row : rows) {
      const ordered_json j = ToJson(row);
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += '\t';
        out += cell(v);
        first = false;
      }
      out += '\n';
    }
    return out;
  }
  if (!doc.contains("result")) throw ParseError("report: no result section");
  out = "key\tvalue\n";
  out += "kind\t" + kind + "\n";
  for (const auto& [k, v] : doc["result"].items()) {
    if (v.is_object()) {
      for (const auto& [k2, v2] : v.items()) out += k + "." + k2 + "\t" + cell(v2) + "\n";
    } else {
      out += k + "\t" + cell(v) + "\n";
    }
  }
  return out;
}

}  // namespace

std::string RunCommand(std::string_view command, const RunConfig& config) {
  std::string document;
  std::string binary;
  if (command == "partition") {
    document = CommandPartition(config);
  } else if (command == "levels") {
    document = CommandLevels(config);
  } else if (command == "embed") {
    document = CommandEmbed(config, binary);
  } else if (command == "energy") {
    document = CommandEnergy(config);
  } else if (command == "brw") {
    document = CommandBrw(config);
  } else if (command == "rwc") {
    document = CommandRwc(config);
  } else if (command == "guerra") {
    document = CommandGuerra(config);
  } else if (command == "sweep") {
    document = CommandSweep(config);
  } else if (command == "report") {
    document = CommandReport(config);
  } else {
    throw InvalidArgument("unknown command '" + std::string(command) + "'");
  }
  if (config.Has("output")) {
    WriteFile(config.String("output"), command == "embed" ? binary : document);
  }
  return document;
}

}  // namespace controversy
