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

// Slow reference implementations written straight from the definitions.
// They deliberately share no shortcuts with the library code they check.

#ifndef DIRECTRANK_TESTS_SUPPORT_ORACLES_HPP
#define DIRECTRANK_TESTS_SUPPORT_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "directrank/inference.hpp"
#include "directrank/mlp.hpp"
#include "directrank/ranking.hpp"
#include "directrank/rng.hpp"

namespace testsup {

namespace dr = directrank;

/// Pairwise ranking score by the literal double loop over (pos, neg) pairs.
inline double naive_score(const dr::RankingInstance& inst,
                          const dr::Interleaving& y) {
  const int m = inst.num_pos();
  const int n = inst.num_neg();
  std::vector<int> pos_rank;
  std::vector<int> neg_rank;
  for (int r = 0; r < y.size(); ++r) {
    if (y.bits[r] == dr::Entry::Pos)
      pos_rank.push_back(r);
    else
      neg_rank.push_back(r);
  }
  double f = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const double yhat = pos_rank[i] < neg_rank[j] ? 1.0 : -1.0;
      f += yhat * (inst.pos_scores[i] - inst.neg_scores[j]);
    }
  return f / (static_cast<double>(m) * n);
}

/// Mean precision at the ranked positions of relevant items, accumulated
/// position by position.
inline double naive_ap_loss(const dr::RankVector& pred) {
  int seen_relevant = 0;
  double prec_sum = 0.0;
  for (int r = 0; r < pred.size(); ++r) {
    if (pred.relevance[r] == 0) continue;
    ++seen_relevant;
    prec_sum += static_cast<double>(seen_relevant) / (r + 1);
  }
  return 1.0 - prec_sum / seen_relevant;
}

/// Calls fn with every interleaving of m positives and n negatives.
inline void for_each_interleaving(
    int m, int n, const std::function<void(const dr::Interleaving&)>& fn) {
  std::vector<std::uint8_t> tags(static_cast<std::size_t>(m), 0);
  tags.insert(tags.end(), static_cast<std::size_t>(n), 1);
  do {
    dr::Interleaving y;
    y.bits.reserve(tags.size());
    for (std::uint8_t t : tags)
      y.bits.push_back(t == 0 ? dr::Entry::Pos : dr::Entry::Neg);
    fn(y);
  } while (std::next_permutation(tags.begin(), tags.end()));
}

inline dr::RankingInstance random_instance(dr::Rng& rng, int p, int n) {
  std::vector<double> pos(static_cast<std::size_t>(p));
  std::vector<double> neg(static_cast<std::size_t>(n));
  for (double& v : pos) v = rng.normal();
  for (double& v : neg) v = rng.normal();
  return dr::RankingInstance::from_class_scores(std::move(pos), std::move(neg));
}

/// Pointers to every parameter coordinate, weights then biases per layer.
inline std::vector<double*> param_coords(dr::MlpParams& p) {
  std::vector<double*> out;
  out.reserve(p.num_params());
  for (int l = 0; l < p.num_layers(); ++l) {
    for (double& v : p.weights[l].data) out.push_back(&v);
    for (double& v : p.biases[l]) out.push_back(&v);
  }
  return out;
}

inline std::vector<double> grad_coords(const dr::MlpGrad& g) {
  std::vector<double> out;
  for (std::size_t l = 0; l < g.weights.size(); ++l) {
    out.insert(out.end(), g.weights[l].data.begin(), g.weights[l].data.end());
    out.insert(out.end(), g.biases[l].begin(), g.biases[l].end());
  }
  return out;
}

/// A single-layer identity network: score(x) = w * x[0] + b.
inline dr::MlpParams linear_net(double w, double b) {
  dr::MlpParams p;
  p.dims = {1, 1};
  p.weights.emplace_back(1, 1, w);
  p.biases.push_back({b});
  return p;
}

}  // namespace testsup

#endif  // DIRECTRANK_TESTS_SUPPORT_ORACLES_HPP
