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

#ifndef DIRECTRANK_RANKING_HPP
#define DIRECTRANK_RANKING_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace directrank {

/// Binary relevance sequence in ranked order (1 = relevant).
struct RankVector {
  std::vector<std::uint8_t> relevance;

  int size() const { return static_cast<int>(relevance.size()); }
  int ones() const;

  /// The ideal vector for m relevant and n irrelevant items: all 1s first.
  static RankVector ideal(int m, int n);

  bool operator==(const RankVector&) const = default;
};

enum class Entry : std::uint8_t { Pos, Neg };

/// A complete ranking restricted to the sorted-interleaving space: each class
/// is kept internally in descending score order, so a ranking is fully
/// described by the class tag at each position.
struct Interleaving {
  std::vector<Entry> bits;

  int size() const { return static_cast<int>(bits.size()); }
  int pos_count() const;
  int neg_count() const { return size() - pos_count(); }

  static Interleaving all_pos_first(int m, int n);
  Interleaving reversed() const;
  RankVector to_rank_vector() const;

  bool operator==(const Interleaving&) const = default;
};

/// Scored samples split by relevance label, each class sorted by descending
/// score with ties broken by ascending original sample index. The ids vectors
/// remember where each class-ranked element came from.
struct RankingInstance {
  std::vector<double> pos_scores;
  std::vector<double> neg_scores;
  std::vector<int> pos_ids;
  std::vector<int> neg_ids;

  int num_pos() const { return static_cast<int>(pos_scores.size()); }
  int num_neg() const { return static_cast<int>(neg_scores.size()); }
  int size() const { return num_pos() + num_neg(); }

  /// Samples with ids 0..n-1; label 1 goes to the positive class.
  static RankingInstance from_scores(std::span<const double> scores,
                                     std::span<const std::uint8_t> labels);

  /// Unsorted per-class score lists; ids are assigned 0..m-1 to the sorted
  /// positives and m..m+n-1 to the sorted negatives.
  static RankingInstance from_class_scores(std::vector<double> pos,
                                           std::vector<double> neg);

  /// Throws InvalidInput if either class is empty (inference precondition).
  void require_both_classes() const;
};

/// Per-sample weights that turn pairwise comparisons into a weighted sum:
/// F(y) = sum_i coeff_i * score_i, and the same coefficients drive the
/// gradient of F through the scoring network. For every sample the weight is
/// (opposite-class items ranked below it - ranked above it) / (m*n).
struct PairCoeffs {
  std::vector<double> pos;  // indexed by positive class rank
  std::vector<double> neg;  // indexed by negative class rank
};

PairCoeffs interleaving_coeffs(const RankingInstance& inst, const Interleaving& y);

/// Coefficients rearranged by original sample id (ids must be 0..m+n-1).
std::vector<double> sample_coeffs(const RankingInstance& inst, const Interleaving& y);

/// Relevance sequence after sorting by descending score (stable in the
/// original index). scores and labels must have equal nonzero length.
RankVector rank_from_scores(std::span<const double> scores,
                            std::span<const std::uint8_t> labels);

/// Task loss 1 - (1/|P|) * sum of Prec@j over positions j holding a relevant
/// item. truth only fixes the expected number of relevant items.
double ap_loss(const RankVector& truth, const RankVector& pred);

/// Fraction of relevant items among the top j positions, 1 <= j <= size.
double prec_at(const RankVector& pred, int j);

/// Pairwise ranking score (1/(m*n)) * sum_{i,j} yhat_ij (phi_i - phi_j),
/// evaluated through the per-sample coefficient identity in O(m+n).
double score_F(const RankingInstance& inst, const Interleaving& y);

/// Fraction of mismatched labels.
double zero_one_loss(std::span<const std::uint8_t> truth_labels,
                     std::span<const std::uint8_t> pred_labels);

/// The score-sort ranking as an interleaving: merges the two sorted class
/// lists by (descending score, ascending id). This is argmax_y F.
Interleaving merge_by_score(const RankingInstance& inst);

}  // namespace directrank

#endif  // DIRECTRANK_RANKING_HPP
