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

#ifndef DIRECTRANK_CERTIFY_HPP
#define DIRECTRANK_CERTIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "directrank/inference.hpp"

namespace directrank {

struct OracleCheckOptions {
  int max_p = 6;
  int max_n = 6;
  int trials = 50;
  std::uint64_t seed = 7;
  std::vector<double> eps_grid = {0.01, 0.1, 1.0, 10.0};
  bool full_perm = false;
  int full_perm_limit = 7;  // permutation oracle runs when p + n <= this
  double tolerance = 1e-9;
};

struct OracleCheckReport {
  long long checks = 0;
  long long failures = 0;
  double max_deviation = 0.0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

using Solver =
    std::function<InferenceResult(const RankingInstance&, const LossAugConfig&)>;

/// Checks a loss-augmented solver against exhaustive enumeration on random
/// standard-normal score instances for every class-size pair up to the
/// bounds, both signs, every epsilon in the grid. Each instance is checked
/// for objective agreement with the interleaving enumeration and for
/// self-consistency of the returned solution's directly evaluated objective;
/// with full_perm, small instances are also checked against enumeration of
/// every ordering of the individual samples. The default solver is the
/// dynamic program.
OracleCheckReport run_oracle_check(const OracleCheckOptions& opts);
OracleCheckReport run_oracle_check(const OracleCheckOptions& opts,
                                   const Solver& solver);

}  // namespace directrank

#endif  // DIRECTRANK_CERTIFY_HPP
