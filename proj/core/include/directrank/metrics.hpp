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

#ifndef DIRECTRANK_METRICS_HPP
#define DIRECTRANK_METRICS_HPP

#include <cstdint>
#include <span>

namespace directrank {

/// Mean of Prec@j over the ranked positions of relevant items, ranking by
/// descending score with stable ties. Equals 1 - ap_loss of the induced rank
/// vector by construction. Requires both classes.
double average_precision(std::span<const double> scores,
                         std::span<const std::uint8_t> labels);

/// Fraction of samples whose thresholded score (score > threshold -> 1)
/// mismatches the label.
double zero_one_error(std::span<const double> scores,
                      std::span<const std::uint8_t> labels,
                      double threshold = 0.0);

}  // namespace directrank

#endif  // DIRECTRANK_METRICS_HPP
