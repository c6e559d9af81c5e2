/*
 * Copyright 2026 The directrank Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DIRECTRANK_RNG_HPP
#define DIRECTRANK_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace directrank {

/// Deterministic random source used everywhere in the toolkit.
///
/// The generator is std::mt19937_64 (fully specified by the standard) and all
/// derived draws are implemented here rather than with std::*_distribution,
/// whose output is implementation-defined. Same seed, same stream:
///   - uniform01(): 53-bit mantissa draw in [0, 1)
///   - normal(): Box-Muller transform, second deviate cached
///   - below(bound): unbiased bounded integer via rejection sampling
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double normal();

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// splitmix64 of (seed, stream). Used to derive independent sub-streams
/// (weights vs. inputs vs. batch sampling) from one user-facing seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Fisher-Yates shuffle driven by Rng::below.
void shuffle(std::vector<int>& values, Rng& rng);

/// k distinct values from {0, ..., n-1}, returned in ascending order.
std::vector<int> sample_without_replacement(int n, int k, Rng& rng);

}  // namespace directrank

#endif  // DIRECTRANK_RNG_HPP
