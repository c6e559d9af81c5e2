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

#ifndef DIRECTRANK_MLP_HPP
#define DIRECTRANK_MLP_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "directrank/matrix.hpp"
#include "directrank/rng.hpp"

namespace directrank {

/// Fully connected scorer: rectified-linear hidden layers, identity output,
/// scalar score. weights[l] maps activations of width dims[l] to width
/// dims[l+1]; the last dim must be 1.
struct MlpParams {
  std::vector<int> dims;
  std::vector<Matrix> weights;
  std::vector<std::vector<double>> biases;

  int num_layers() const { return static_cast<int>(weights.size()); }
  int input_dim() const { return dims.front(); }
  std::size_t num_params() const;

  bool operator==(const MlpParams&) const = default;
};

/// Gradient holder with the same shapes as MlpParams.
struct MlpGrad {
  std::vector<Matrix> weights;
  std::vector<std::vector<double>> biases;

  static MlpGrad zeros_like(const MlpParams& p);
  void clear();
};

/// Per-sample forward pass record: act[0] is the input, act[l+1] and pre[l]
/// belong to layer l. Reusable across samples.
struct ForwardCache {
  std::vector<std::vector<double>> pre;
  std::vector<std::vector<double>> act;
};

struct BackpropScratch {
  std::vector<double> delta;
  std::vector<double> delta_prev;
};

/// Standard-normal weights and biases. Per layer, weight entries are drawn in
/// row-major order and the bias vector follows, so a seed fixes the network.
MlpParams mlp_init(const std::vector<int>& dims, Rng& rng);
MlpParams mlp_init(const std::vector<int>& dims, std::uint64_t seed);

double mlp_forward(const MlpParams& p, std::span<const double> x);
double mlp_forward(const MlpParams& p, std::span<const double> x, ForwardCache& cache);

/// Adds out_grad * d(score)/d(theta) at the cached forward point. The
/// rectifier derivative at exactly zero is taken as zero.
void mlp_backward_accum(const MlpParams& p, const ForwardCache& cache,
                        double out_grad, MlpGrad& grad, BackpropScratch& scratch);

/// Gradient of sum_k coeffs[k] * score(features row rows[k]). Rows are
/// processed in the given order; pass them sorted for a fixed accumulation
/// order.
MlpGrad grad_with_coeffs(const MlpParams& p, const Matrix& features,
                         std::span<const int> rows, std::span<const double> coeffs);

/// Scores every row of features.
std::vector<double> score_all(const MlpParams& p, const Matrix& features);

/// grad += 2 * l2_weight * theta over every parameter.
void add_l2(MlpGrad& grad, const MlpParams& p, double l2_weight);

/// theta -= learning_rate * grad.
void apply_step(MlpParams& p, const MlpGrad& grad, double learning_rate);

/// Text checkpoint; numbers use shortest round-trip formatting, so a
/// save/load cycle reproduces the parameters exactly.
void write_params(std::ostream& os, const MlpParams& p);
MlpParams read_params(std::istream& is);
void save_checkpoint(const MlpParams& p, const std::string& path);
MlpParams load_checkpoint(const std::string& path);

}  // namespace directrank

#endif  // DIRECTRANK_MLP_HPP
