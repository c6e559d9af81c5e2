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

#include "directrank/ranking.hpp"

#include <algorithm>
#include <numeric>

#include "directrank/errors.hpp"

namespace directrank {

int RankVector::ones() const {
  int c = 0;
  for (std::uint8_t r : relevance) c += r;
  return c;
}

RankVector RankVector::ideal(int m, int n) {
  if (m < 0 || n < 0) throw InvalidInput("negative class count");
  RankVector v;
  v.relevance.assign(static_cast<std::size_t>(m + n), 0);
  std::fill(v.relevance.begin(), v.relevance.begin() + m, std::uint8_t{1});
  return v;
}

int Interleaving::pos_count() const {
  int c = 0;
  for (Entry e : bits) c += (e == Entry::Pos);
  return c;
}

Interleaving Interleaving::all_pos_first(int m, int n) {
  if (m < 0 || n < 0) throw InvalidInput("negative class count");
  Interleaving y;
  y.bits.assign(static_cast<std::size_t>(m + n), Entry::Neg);
  std::fill(y.bits.begin(), y.bits.begin() + m, Entry::Pos);
  return y;
}

Interleaving Interleaving::reversed() const {
  Interleaving y = *this;
  std::reverse(y.bits.begin(), y.bits.end());
  return y;
}

RankVector Interleaving::to_rank_vector() const {
  RankVector v;
  v.relevance.reserve(bits.size());
  for (Entry e : bits) v.relevance.push_back(e == Entry::Pos ? 1 : 0);
  return v;
}

namespace {

// Sorts indices by descending value, stable in the original order.
std::vector<int> sorted_desc(const std::vector<double>& v) {
  std::vector<int> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return v[a] > v[b]; });
  return idx;
}

}  // namespace

RankingInstance RankingInstance::from_scores(std::span<const double> scores,
                                             std::span<const std::uint8_t> labels) {
  if (scores.size() != labels.size())
    throw InvalidInput("scores and labels differ in length");
  RankingInstance inst;
  std::vector<std::pair<double, int>> pos, neg;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (labels[i] > 1) throw InvalidInput("labels must be 0 or 1");
    auto& dst = labels[i] ? pos : neg;
    dst.emplace_back(scores[i], static_cast<int>(i));
  }
  auto by_score = [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  };
  std::sort(pos.begin(), pos.end(), by_score);
  std::sort(neg.begin(), neg.end(), by_score);
  for (auto& [s, i] : pos) {
    inst.pos_scores.push_back(s);
    inst.pos_ids.push_back(i);
  }
  for (auto& [s, i] : neg) {
    inst.neg_scores.push_back(s);
    inst.neg_ids.push_back(i);
  }
  return inst;
}

RankingInstance RankingInstance::from_class_scores(std::vector<double> pos,
                                                   std::vector<double> neg) {
  std::sort(pos.begin(), pos.end(), std::greater<double>());
  std::sort(neg.begin(), neg.end(), std::greater<double>());
  RankingInstance inst;
  inst.pos_scores = std::move(pos);
  inst.neg_scores = std::move(neg);
  inst.pos_ids.resize(inst.pos_scores.size());
  inst.neg_ids.resize(inst.neg_scores.size());
  std::iota(inst.pos_ids.begin(), inst.pos_ids.end(), 0);
  std::iota(inst.neg_ids.begin(), inst.neg_ids.end(), inst.num_pos());
  return inst;
}

void RankingInstance::require_both_classes() const {
  if (num_pos() == 0 || num_neg() == 0)
    throw InvalidInput("need at least one sample of each class");
}

PairCoeffs interleaving_coeffs(const RankingInstance& inst, const Interleaving& y) {
  const int m = inst.num_pos();
  const int n = inst.num_neg();
  if (y.size() != m + n || y.pos_count() != m)
    throw InvalidInput("interleaving does not match instance");
  PairCoeffs c;
  c.pos.resize(m);
  c.neg.resize(n);
  const double scale = 1.0 / (static_cast<double>(m) * n);
  int seen_pos = 0, seen_neg = 0;
  for (Entry e : y.bits) {
    if (e == Entry::Pos) {
      // Opposite-class items above: seen_neg; below: n - seen_neg.
      c.pos[seen_pos] = scale * ((n - seen_neg) - seen_neg);
      ++seen_pos;
    } else {
      c.neg[seen_neg] = scale * ((m - seen_pos) - seen_pos);
      ++seen_neg;
    }
  }
  return c;
}

std::vector<double> sample_coeffs(const RankingInstance& inst, const Interleaving& y) {
  PairCoeffs c = interleaving_coeffs(inst, y);
  std::vector<double> out(static_cast<std::size_t>(inst.size()), 0.0);
  for (int i = 0; i < inst.num_pos(); ++i) out[inst.pos_ids[i]] = c.pos[i];
  for (int j = 0; j < inst.num_neg(); ++j) out[inst.neg_ids[j]] = c.neg[j];
  return out;
}

RankVector rank_from_scores(std::span<const double> scores,
                            std::span<const std::uint8_t> labels) {
  if (scores.size() != labels.size())
    throw InvalidInput("scores and labels differ in length");
  if (scores.empty()) throw InvalidInput("empty score list");
  std::vector<double> v(scores.begin(), scores.end());
  std::vector<int> idx = sorted_desc(v);
  RankVector r;
  r.relevance.reserve(idx.size());
  for (int i : idx) r.relevance.push_back(labels[i]);
  return r;
}

double ap_loss(const RankVector& truth, const RankVector& pred) {
  if (truth.size() != pred.size())
    throw InvalidInput("rank vectors differ in length");
  const int m = truth.ones();
  if (m != pred.ones()) throw InvalidInput("rank vectors differ in relevant count");
  if (m == 0) throw InvalidInput("no relevant items");
  double sum = 0.0;
  int hits = 0;
  for (int j = 0; j < pred.size(); ++j) {
    if (pred.relevance[j]) {
      ++hits;
      sum += static_cast<double>(hits) / (j + 1);
    }
  }
  return 1.0 - sum / m;
}

double prec_at(const RankVector& pred, int j) {
  if (j < 1 || j > pred.size()) throw InvalidInput("position out of range");
  int hits = 0;
  for (int i = 0; i < j; ++i) hits += pred.relevance[i];
  return static_cast<double>(hits) / j;
}

double score_F(const RankingInstance& inst, const Interleaving& y) {
  inst.require_both_classes();
  PairCoeffs c = interleaving_coeffs(inst, y);
  double f = 0.0;
  for (int i = 0; i < inst.num_pos(); ++i) f += c.pos[i] * inst.pos_scores[i];
  for (int j = 0; j < inst.num_neg(); ++j) f += c.neg[j] * inst.neg_scores[j];
  return f;
}

double zero_one_loss(std::span<const std::uint8_t> truth_labels,
                     std::span<const std::uint8_t> pred_labels) {
  if (truth_labels.size() != pred_labels.size())
    throw InvalidInput("label vectors differ in length");
  if (truth_labels.empty()) throw InvalidInput("empty label list");
  int wrong = 0;
  for (std::size_t i = 0; i < truth_labels.size(); ++i)
    wrong += (truth_labels[i] != pred_labels[i]);
  return static_cast<double>(wrong) / truth_labels.size();
}

Interleaving merge_by_score(const RankingInstance& inst) {
  inst.require_both_classes();
  Interleaving y;
  y.bits.reserve(inst.size());
  int i = 0, j = 0;
  const int m = inst.num_pos();
  const int n = inst.num_neg();
  while (i < m && j < n) {
    const double ps = inst.pos_scores[i];
    const double ns = inst.neg_scores[j];
    bool take_pos;
    if (ps != ns) {
      take_pos = ps > ns;
    } else {
      take_pos = inst.pos_ids[i] < inst.neg_ids[j];
    }
    if (take_pos) {
      y.bits.push_back(Entry::Pos);
      ++i;
    } else {
      y.bits.push_back(Entry::Neg);
      ++j;
    }
  }
  for (; i < m; ++i) y.bits.push_back(Entry::Pos);
  for (; j < n; ++j) y.bits.push_back(Entry::Neg);
  return y;
}

}  // namespace directrank
