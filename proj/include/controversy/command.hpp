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

#ifndef CONTROVERSY_COMMAND_HPP_
#define CONTROVERSY_COMMAND_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace controversy {

// Flat `key = value` run configuration shared by the config file, the CLI
// flags and the C API. Keys are the long flag names (e.g. "energy-mode").
class RunConfig {
 public:
  // Throws InvalidArgument for unknown keys.
  void Set(std::string_view key, std::string_view value);
  void Unset(std::string_view key);
  // `key = value` lines; '#' starts a comment. Later keys override.
  void LoadText(std::string_view text);
  void LoadFile(const std::string& path);

  bool Has(std::string_view key) const;
  std::string String(std::string_view key, std::string_view fallback = "") const;
  double Number(std::string_view key, double fallback) const;
  std::size_t Count(std::string_view key, std::size_t fallback,
                    std::size_t min = 0) const;
  std::uint64_t Seed(std::string_view key, std::uint64_t fallback) const;
  bool Flag(std::string_view key, bool fallback) const;

  const std::map<std::string, std::string, std::less<>>& values() const {
    return values_;
  }

  static const std::vector<std::string_view>& KnownKeys();

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

const std::vector<std::string_view>& Commands();

// Worker count: the `threads` key, else $CONTROVERSY_LAB_THREADS, else 1.
unsigned ResolveThreads(const RunConfig& config);

// Runs one subcommand. Returns its primary document (CSV, partition text,
// JSON report, or for `embed` a JSON summary) and writes the primary output
// to `output` when set. Side outputs (`walks-out`, `text-out`) are written
// here as well.
std::string RunCommand(std::string_view command, const RunConfig& config);

}  // namespace controversy

#endif  // CONTROVERSY_COMMAND_HPP_
