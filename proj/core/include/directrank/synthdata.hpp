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

#ifndef DIRECTRANK_SYNTHDATA_HPP
#define DIRECTRANK_SYNTHDATA_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "directrank/matrix.hpp"

namespace directrank {

struct MlpParams;

/// Labeled feature rows; the row index is the sample id.
struct Dataset {
  Matrix features;
  std::vector<std::uint8_t> labels;

  int size() const { return features.rows; }
  int dim() const { return features.cols; }
  int num_pos() const;
  int num_neg() const { return size() - num_pos(); }

  /// Throws InvalidConfig unless both classes are present.
  void require_both_classes() const;
};

/// Standard-normal inputs scored by a random 4-hidden-layer ReLU network;
/// the top ceil(pos_frac * n) scores are labeled positive, shrunk past any
/// score tie so positives stay strictly above negatives. Seed streams:
/// teacher parameters first, then inputs row by row. When teacher_out is
/// non-null it receives the scoring network.
Dataset gen_teacher(int n, int dim, int hidden, double pos_frac,
                    std::uint64_t seed, MlpParams* teacher_out = nullptr);

/// Normal coordinates of standard deviation sigma; a draw is kept with label
/// 1 when its squared norm exceeds t_hi, label 0 when below t_lo, and
/// redrawn inside the band, until n samples are kept.
Dataset gen_norm_threshold(int n, int dim = 10, double sigma = 10.0,
                           double t_hi = 1200.0, double t_lo = 1000.0,
                           std::uint64_t seed = 0);

/// Complements the labels of floor(fraction * n) distinct seeded indices.
/// The same (seed, fraction) applied twice restores the input.
Dataset flip_labels(const Dataset& ds, double fraction, std::uint64_t seed);

/// Seeded partition into floor(train_frac * n) training rows and the rest,
/// each split keeping the original row order.
std::pair<Dataset, Dataset> split(const Dataset& ds, double train_frac,
                                  std::uint64_t seed);

/// CSV with header label,f0,...,f{d-1}; shortest round-trip floats.
void write_csv(std::ostream& os, const Dataset& ds);
void write_csv_file(const std::string& path, const Dataset& ds);
Dataset read_csv(std::istream& is);
Dataset read_csv_file(const std::string& path);

}  // namespace directrank

#endif  // DIRECTRANK_SYNTHDATA_HPP
