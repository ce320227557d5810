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

// controversy-lab command line front end over the C API.

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "controversy/controversy.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct OptionSpec {
  const char* key;
  const char* help;
  bool boolean = false;
};

const std::vector<OptionSpec> kInputOptions = {
    {"edges", "Edge list: one 'source<TAB>target' per line"},
    {"attributes", "Node attribute CSV with a 'node,...' header"},
    {"partition", "Partition file 'label<TAB>{0|1}' (default: spectral bisection)"},
    {"reverse-edges", "Reverse every edge on load", true},
    {"lcc", "Restrict to the largest weakly connected component (default true)", true},
    {"sample", "Keep this fraction of nodes before preprocessing"},
    {"seed", "Master seed"},
    {"output", "Write the primary output here instead of stdout"},
};

const std::vector<OptionSpec> kPipelineOptions = {
    {"mode", "Feature space: node2vec, attributes or both"},
    {"dims", "Feature dimensions"},
    {"struct-dims", "Structural dimensions in mode both"},
    {"attr-dims", "Attribute dimensions in mode both"},
    {"n2v-walks", "node2vec walks per node"},
    {"n2v-length", "node2vec walk length"},
    {"n2v-window", "node2vec context window"},
    {"n2v-p", "node2vec return parameter"},
    {"n2v-q", "node2vec in-out parameter"},
    {"n2v-epochs", "node2vec training epochs"},
    {"n2v-negatives", "node2vec negative samples"},
    {"n2v-lr", "node2vec initial learning rate"},
    {"deterministic", "Bit-reproducible single-threaded node2vec training", true},
    {"cache-dir", "Directory for cached node2vec embeddings"},
};

const std::vector<OptionSpec> kEnergyOptions = {
    {"energy-mode", "Loss energy: simple or full"},
    {"multiplier", "Initial energy multiplier"},
    {"alpha", "Closeness weight of the full loss"},
    {"beta", "Distance weight of the full loss"},
    {"gamma", "Conductance weight of the full loss"},
    {"metric", "Feature distance: euclidean or cosine"},
};

const std::vector<OptionSpec> kWalkOptions = {
    {"walks", "Biased random walks per node"},
    {"step-cap", "Maximum steps per walk"},
};

struct Subcommand {
  const char* name;
  const char* help;
  std::vector<const std::vector<OptionSpec>*> groups;
  std::vector<OptionSpec> extra;
};

std::vector<Subcommand> BuildSubcommands() {
  return {
      {"partition", "Split the graph into two communities", {&kInputOptions}, {}},
      {"levels", "Per-node side, level and conductance as CSV", {&kInputOptions}, {}},
      {"embed",
       "Build the feature space and write it as a binary embedding",
       {&kInputOptions, &kPipelineOptions},
       {{"text-out", "Also write a 'label v1 ... vd' text export"}}},
      {"energy",
       "Per-node initial and loss energies as CSV",
       {&kInputOptions, &kPipelineOptions, &kEnergyOptions},
       {}},
      {"brw",
       "Biased random walk controversy scores",
       {&kInputOptions, &kPipelineOptions, &kEnergyOptions, &kWalkOptions},
       {{"walks-out", "Write per-walk records as CSV"}}},
      {"rwc",
       "Random walk controversy baseline",
       {&kInputOptions},
       {{"rwc-k", "Absorbing influencers per side"},
        {"rwc-repeats", "Walks per start node"}}},
      {"guerra", "Boundary polarity baseline", {&kInputOptions}, {}},
      {"sweep",
       "Score controversy across noise levels",
       {&kInputOptions, &kPipelineOptions, &kEnergyOptions, &kWalkOptions},
       {{"axis", "Noise axis: structural, attribute or both"},
        {"levels", "Noise levels as 'start:stop:step' or a comma list"},
        {"repartition", "Re-detect the partition on every noisy graph", true}}},
      {"report",
       "Render a stored JSON report as a TSV table",
       {},
       {{"input", "Report file"}, {"output", "Write the table here instead of stdout"}}},
  };
}

int ExitCodeFor(cl_status status) {
  switch (status) {
    case CL_OK:
      return kExitOk;
    case CL_ERROR_INVALID_ARGUMENT:
      return kExitUsage;
    case CL_ERROR_PARSE:
    case CL_ERROR_IO:
    case CL_ERROR_DATA:
      return kExitData;
    default:
      return kExitInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantify controversy in two-sided graphs with biased random walks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(cl_version()));

  std::string config_path;
  std::string threads;
  app.add_option("--config", config_path, "Run configuration file of 'key = value' lines");
  app.add_option("--threads", threads, "Worker threads (default $CONTROVERSY_LAB_THREADS or 1)");

  const std::vector<Subcommand> subcommands = BuildSubcommands();
  // One slot per (subcommand, key); only flags given on the command line
  // reach the configuration.
  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, CLI::Option*>> options;
  std::map<std::string, CLI::App*> apps;
  for (const Subcommand& sub : subcommands) {
    CLI::App* s = app.add_subcommand(sub.name, sub.help);
    apps[sub.name] = s;
    auto add = [&](const OptionSpec& spec) {
      std::string& slot = values[sub.name][spec.key];
      const std::string flag = std::string("--") + spec.key;
      CLI::Option* opt = spec.boolean ? s->add_flag(flag + "{true}", slot, spec.help)
                                      : s->add_option(flag, slot, spec.help);
      options[sub.name][spec.key] = opt;
    };
    for (const auto* group : sub.groups) {
      for (const OptionSpec& spec : *group) add(spec);
    }
    for (const OptionSpec& spec : sub.extra) add(spec);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string command;
  for (const auto& [name, sub] : apps) {
    if (sub->parsed()) command = name;
  }

  cl_config* raw = nullptr;
  if (cl_config_create(&raw) != CL_OK) {
    std::fprintf(stderr, "error: %s\n", cl_last_error());
    return kExitInternal;
  }
  std::unique_ptr<cl_config, decltype(&cl_config_free)> config(raw, cl_config_free);

  cl_status status = CL_OK;
  if (!config_path.empty()) status = cl_config_load_file(config.get(), config_path.c_str());
  for (const auto& [key, opt] : options[command]) {
    if (status != CL_OK) break;
    if (opt->count() > 0) {
      status = cl_config_set(config.get(), key.c_str(), values[command][key].c_str());
    }
  }
  if (status == CL_OK && !threads.empty()) {
    status = cl_config_set(config.get(), "threads", threads.c_str());
  }
  if (status != CL_OK) {
    std::fprintf(stderr, "error: %s\n", cl_last_error());
    return ExitCodeFor(status);
  }

  char* document = nullptr;
  status = cl_run_command(command.c_str(), config.get(), &document);
  if (status != CL_OK) {
    std::fprintf(stderr, "error: %s\n", cl_last_error());
    if (status == CL_ERROR_INVALID_ARGUMENT) std::cerr << apps[command]->help();
    return ExitCodeFor(status);
  }
  std::unique_ptr<char, decltype(&cl_string_free)> doc(document, cl_string_free);
  // The primary output went to --output; embed always writes its summary.
  const bool to_file = cl_config_has(config.get(), "output") != 0;
  if (!to_file || command == "embed") std::fputs(doc.get(), stdout);
  return kExitOk;
}
