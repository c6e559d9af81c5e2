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

#ifndef DIRECTRANK_INFERENCE_HPP
#define DIRECTRANK_INFERENCE_HPP

#include <cstdint>
#include <vector>

#include "directrank/matrix.hpp"
#include "directrank/ranking.hpp"

namespace directrank {

/// Update direction. Positive augments the score maximization with +eps*loss
/// (finds a high-scoring bad ranking), Negative with -eps*loss (finds a
/// high-scoring good ranking).
enum class Sign { Positive, Negative };

struct LossAugConfig {
  double epsilon = 1.0;
  Sign sign = Sign::Positive;
};

struct InferenceResult {
  Interleaving y;
  double objective = 0.0;
};

/// F(y) + eps*L(y) for Positive, F(y) - eps*L(y) for Negative.
double loss_augmented_value(const RankingInstance& inst, const Interleaving& y,
                            const LossAugConfig& cfg);

/// argmax_y F(y): the score-sort ranking, with its score as objective.
InferenceResult standard_inference(const RankingInstance& inst);

/// Dynamic program state over prefixes holding i positives and j negatives.
/// h(i,j) is the best partial objective among all such prefixes; B(i,j) is
/// the pairwise score added by appending positive i below negatives 1..j,
/// G(i,j) the score added by appending negative j below positives 1..i.
struct DpState {
  int m = 0;
  int n = 0;
  Matrix h{1, 1};
  Matrix B{1, 1};
  Matrix G{1, 1};
  std::vector<std::uint8_t> from_pos;  // (m+1)*(n+1), row-major

  bool cell_from_pos(int i, int j) const {
    return from_pos[static_cast<std::size_t>(i) * (n + 1) + j] != 0;
  }
};

DpState dp_fill(const RankingInstance& inst, const LossAugConfig& cfg);
Interleaving dp_backtrack(const DpState& state);

/// Exact loss-augmented maximization over all sorted-class interleavings in
/// O(m*n) time. Requires at least one sample of each class.
InferenceResult dp_loss_augmented(const RankingInstance& inst,
                                  const LossAugConfig& cfg);

/// Exhaustive maximization over the choose(m+n, m) interleavings. Keeps the
/// lexicographically first maximizer (positive-before-negative orders first).
/// Throws SizeLimitError above max_candidates.
InferenceResult brute_force_interleavings(const RankingInstance& inst,
                                          const LossAugConfig& cfg,
                                          std::uint64_t max_candidates = 1000000);

/// Exhaustive maximization over all (m+n)! orderings of the individual
/// samples, not just sorted-class interleavings. Returns the best objective.
/// Throws SizeLimitError above max_candidates.
double brute_force_all_rankings(const RankingInstance& inst,
                                const LossAugConfig& cfg,
                                std::uint64_t max_candidates = 1000000);

}  // namespace directrank

#endif  // DIRECTRANK_INFERENCE_HPP
