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

#include "directrank/certify.hpp"

#include <cmath>
#include <sstream>

#include "directrank/errors.hpp"
#include "directrank/rng.hpp"
#include "directrank/text.hpp"

namespace directrank {

namespace {

std::string describe(const RankingInstance& inst, double eps, Sign sign,
                     const char* kind, double dev) {
  std::ostringstream os;
  os << "kind=" << kind << " p=" << inst.num_pos() << " n=" << inst.num_neg()
     << " eps=" << format_double(eps)
     << " sign=" << (sign == Sign::Positive ? "pos" : "neg")
     << " dev=" << format_double(dev) << " pos_scores=";
  for (std::size_t i = 0; i < inst.pos_scores.size(); ++i)
    os << (i ? "," : "") << format_double(inst.pos_scores[i]);
  os << " neg_scores=";
  for (std::size_t i = 0; i < inst.neg_scores.size(); ++i)
    os << (i ? "," : "") << format_double(inst.neg_scores[i]);
  return os.str();
}

}  // namespace

OracleCheckReport run_oracle_check(const OracleCheckOptions& opts) {
  return run_oracle_check(opts, [](const RankingInstance& inst,
                                   const LossAugConfig& cfg) {
    return dp_loss_augmented(inst, cfg);
  });
}

OracleCheckReport run_oracle_check(const OracleCheckOptions& opts,
                                   const Solver& solver) {
  if (opts.max_p < 1 || opts.max_n < 1 || opts.trials < 1)
    throw InvalidConfig("oracle check needs positive bounds and trials");
  if (opts.eps_grid.empty()) throw InvalidConfig("empty epsilon grid");

  OracleCheckReport report;
  Rng rng(opts.seed);
  auto note = [&](const RankingInstance& inst, double eps, Sign sign,
                  const char* kind, double dev) {
    ++report.checks;
    if (dev > report.max_deviation) report.max_deviation = dev;
    if (dev > opts.tolerance) {
      ++report.failures;
      if (report.first_failure.empty())
        report.first_failure = describe(inst, eps, sign, kind, dev);
    }
  };

  for (int p = 1; p <= opts.max_p; ++p) {
    for (int n = 1; n <= opts.max_n; ++n) {
      for (int trial = 0; trial < opts.trials; ++trial) {
        std::vector<double> pos(static_cast<std::size_t>(p));
        std::vector<double> neg(static_cast<std::size_t>(n));
        for (double& v : pos) v = rng.normal();
        for (double& v : neg) v = rng.normal();
        const RankingInstance inst =
            RankingInstance::from_class_scores(std::move(pos), std::move(neg));

        for (const double eps : opts.eps_grid) {
          for (const Sign sign : {Sign::Positive, Sign::Negative}) {
            const LossAugConfig cfg{.epsilon = eps, .sign = sign};
            const InferenceResult got = solver(inst, cfg);
            const InferenceResult oracle = brute_force_interleavings(inst, cfg);
            note(inst, eps, sign, "objective",
                 std::fabs(got.objective - oracle.objective));
            note(inst, eps, sign, "self",
                 std::fabs(loss_augmented_value(inst, got.y, cfg) -
                           got.objective));
            if (opts.full_perm && p + n <= opts.full_perm_limit) {
              const double perm_best = brute_force_all_rankings(inst, cfg);
              note(inst, eps, sign, "permutation",
                   std::max(0.0, perm_best - got.objective));
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace directrank
