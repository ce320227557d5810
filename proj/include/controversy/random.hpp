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

#ifndef CONTROVERSY_RANDOM_HPP_
#define CONTROVERSY_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace controversy {

// Seed derivation. Every random consumer gets its own stream derived from
// the master seed by name ("partition", "embed", "walks", "noise", "rwc",
// "sample") and then by integer indices (node, repetition, ...). Streams
// never depend on scheduling order, so results are identical for any
// worker count.
std::uint64_t SplitMix64(std::uint64_t x);
std::uint64_t StreamSeed(std::uint64_t master, std::string_view name);
std::uint64_t DeriveSeed(std::uint64_t parent, std::uint64_t index);
std::uint64_t DeriveSeed(std::uint64_t parent, std::uint64_t a,
                         std::uint64_t b);

// Engine plus platform-stable distributions. The std:: distributions are
// implementation-defined, which would break byte-identical reports across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t Below(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace controversy

#endif  // CONTROVERSY_RANDOM_HPP_
