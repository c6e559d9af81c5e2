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

#include "directrank/inference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "directrank/errors.hpp"

namespace directrank {

namespace {

double direction_flag(Sign sign) {
  return sign == Sign::Positive ? -1.0 : 1.0;
}

void validate(const LossAugConfig& cfg) {
  if (!std::isfinite(cfg.epsilon) || cfg.epsilon < 0.0)
    throw InvalidConfig("epsilon must be finite and nonnegative");
}

// choose(m+n, m), capped: returns limit+1 once the count exceeds limit.
std::uint64_t capped_binomial(int m, int n, std::uint64_t limit) {
  std::uint64_t c = 1;
  const int k = std::min(m, n);
  const int total = m + n;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<std::uint64_t>(total - k + i) / i;
    if (c > limit) return limit + 1;
  }
  return c;
}

std::uint64_t capped_factorial(int n, std::uint64_t limit) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= static_cast<std::uint64_t>(i);
    if (f > limit) return limit + 1;
  }
  return f;
}

}  // namespace

double loss_augmented_value(const RankingInstance& inst, const Interleaving& y,
                            const LossAugConfig& cfg) {
  validate(cfg);
  const double f = score_F(inst, y);
  const RankVector truth = RankVector::ideal(inst.num_pos(), inst.num_neg());
  const double loss = ap_loss(truth, y.to_rank_vector());
  const double s = cfg.sign == Sign::Positive ? 1.0 : -1.0;
  return f + s * cfg.epsilon * loss;
}

InferenceResult standard_inference(const RankingInstance& inst) {
  InferenceResult r;
  r.y = merge_by_score(inst);
  r.objective = score_F(inst, r.y);
  return r;
}

DpState dp_fill(const RankingInstance& inst, const LossAugConfig& cfg) {
  inst.require_both_classes();
  validate(cfg);
  const int m = inst.num_pos();
  const int n = inst.num_neg();
  const double scale = 1.0 / (static_cast<double>(m) * n);
  const double flag = direction_flag(cfg.sign);
  const double loss_unit = flag * cfg.epsilon / m;

  DpState st;
  st.m = m;
  st.n = n;
  st.h = Matrix(m + 1, n + 1);
  st.B = Matrix(m + 1, n + 1);
  st.G = Matrix(m + 1, n + 1);
  st.from_pos.assign(static_cast<std::size_t>(m + 1) * (n + 1), 0);

  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double d = scale * (inst.pos_scores[i - 1] - inst.neg_scores[j - 1]);
      st.B(i, j) = st.B(i, j - 1) - d;
      st.G(i, j) = st.G(i - 1, j) + d;
    }
  }

  auto mark = [&](int i, int j, bool pos) {
    st.from_pos[static_cast<std::size_t>(i) * (n + 1) + j] = pos ? 1 : 0;
  };
  for (int i = 1; i <= m; ++i) {
    st.h(i, 0) = st.h(i - 1, 0) + loss_unit;
    mark(i, 0, true);
  }
  for (int j = 1; j <= n; ++j) {
    st.h(0, j) = st.h(0, j - 1) + st.G(0, j);
    mark(0, j, false);
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double cand_pos = st.h(i - 1, j) +
                              loss_unit * (static_cast<double>(i) / (i + j)) +
                              st.B(i, j);
      const double cand_neg = st.h(i, j - 1) + st.G(i, j);
      if (cand_neg > cand_pos) {
        st.h(i, j) = cand_neg;
        mark(i, j, false);
      } else {
        st.h(i, j) = cand_pos;
        mark(i, j, true);
      }
    }
  }
  return st;
}

Interleaving dp_backtrack(const DpState& st) {
  Interleaving y;
  y.bits.assign(static_cast<std::size_t>(st.m + st.n), Entry::Neg);
  int i = st.m, j = st.n;
  while (i + j > 0) {
    if (st.cell_from_pos(i, j)) {
      y.bits[i + j - 1] = Entry::Pos;
      --i;
    } else {
      y.bits[i + j - 1] = Entry::Neg;
      --j;
    }
  }
  return y;
}

InferenceResult dp_loss_augmented(const RankingInstance& inst,
                                  const LossAugConfig& cfg) {
  DpState st = dp_fill(inst, cfg);
  InferenceResult r;
  r.y = dp_backtrack(st);
  r.objective = st.h(st.m, st.n) - direction_flag(cfg.sign) * cfg.epsilon;
  return r;
}

InferenceResult brute_force_interleavings(const RankingInstance& inst,
                                          const LossAugConfig& cfg,
                                          std::uint64_t max_candidates) {
  inst.require_both_classes();
  validate(cfg);
  const int m = inst.num_pos();
  const int n = inst.num_neg();
  if (capped_binomial(m, n, max_candidates) > max_candidates)
    throw SizeLimitError("too many interleavings to enumerate");

  // 0 sorts before 1, so enumeration starts at the all-positive-first order
  // and visits interleavings in lexicographic order.
  std::vector<std::uint8_t> tags(static_cast<std::size_t>(m + n), 1);
  std::fill(tags.begin(), tags.begin() + m, std::uint8_t{0});

  InferenceResult best;
  bool have_best = false;
  do {
    Interleaving y;
    y.bits.reserve(tags.size());
    for (std::uint8_t t : tags)
      y.bits.push_back(t == 0 ? Entry::Pos : Entry::Neg);
    const double v = loss_augmented_value(inst, y, cfg);
    if (!have_best || v > best.objective) {
      best.y = std::move(y);
      best.objective = v;
      have_best = true;
    }
  } while (std::next_permutation(tags.begin(), tags.end()));
  return best;
}

double brute_force_all_rankings(const RankingInstance& inst,
                                const LossAugConfig& cfg,
                                std::uint64_t max_candidates) {
  inst.require_both_classes();
  validate(cfg);
  const int m = inst.num_pos();
  const int n = inst.num_neg();
  const int total = m + n;
  if (capped_factorial(total, max_candidates) > max_candidates)
    throw SizeLimitError("too many orderings to enumerate");

  std::vector<double> scores(inst.pos_scores);
  scores.insert(scores.end(), inst.neg_scores.begin(), inst.neg_scores.end());
  const double scale = 1.0 / (static_cast<double>(m) * n);
  const double s = cfg.sign == Sign::Positive ? 1.0 : -1.0;
  const RankVector truth = RankVector::ideal(m, n);

  std::vector<int> perm(static_cast<std::size_t>(total));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> position(perm.size());
  RankVector pred;
  pred.relevance.resize(perm.size());

  double best = 0.0;
  bool have_best = false;
  do {
    for (int k = 0; k < total; ++k) {
      position[perm[k]] = k;
      pred.relevance[k] = perm[k] < m ? 1 : 0;
    }
    double f = 0.0;
    for (int p = 0; p < m; ++p) {
      for (int q = m; q < total; ++q) {
        const double diff = scale * (scores[p] - scores[q]);
        f += position[p] < position[q] ? diff : -diff;
      }
    }
    const double v = f + s * cfg.epsilon * ap_loss(truth, pred);
    if (!have_best || v > best) {
      best = v;
      have_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace directrank
