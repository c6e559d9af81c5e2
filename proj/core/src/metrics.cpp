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

#include "directrank/metrics.hpp"

#include "directrank/errors.hpp"
#include "directrank/ranking.hpp"

namespace directrank {

double average_precision(std::span<const double> scores,
                         std::span<const std::uint8_t> labels) {
  const RankVector pred = rank_from_scores(scores, labels);
  const int m = pred.ones();
  if (m == 0 || m == pred.size())
    throw InvalidInput("average precision needs both classes");
  return 1.0 - ap_loss(RankVector::ideal(m, pred.size() - m), pred);
}

double zero_one_error(std::span<const double> scores,
                      std::span<const std::uint8_t> labels,
                      double threshold) {
  if (scores.size() != labels.size())
    throw InvalidInput("scores and labels differ in length");
  if (scores.empty()) throw InvalidInput("empty score list");
  int wrong = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const std::uint8_t pred = scores[i] > threshold ? 1 : 0;
    wrong += (pred != labels[i]);
  }
  return static_cast<double>(wrong) / scores.size();
}

}  // namespace directrank
