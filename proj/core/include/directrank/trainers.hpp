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

#ifndef DIRECTRANK_TRAINERS_HPP
#define DIRECTRANK_TRAINERS_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "directrank/mlp.hpp"
#include "directrank/synthdata.hpp"

namespace directrank {

/// The nine training methods. Direct-loss methods move away from a worse
/// ranking (pos) or towards a better one (neg), on either the ranking loss
/// (ap) or the decomposable classification loss (01); the rest are the
/// structured hinge, structured perceptron, and cross-entropy baselines.
enum class Method {
  PosAp,
  NegAp,
  Pos01,
  Neg01,
  HingeAp,
  Hinge01,
  PerAp,
  Per01,
  Xent,
};

enum class TaskLoss { Ap, ZeroOne };

std::string_view method_name(Method m);
Method parse_method(std::string_view name);
bool is_direct_method(Method m);
TaskLoss method_task(Method m);

struct TrainConfig {
  Method method = Method::PosAp;
  double epsilon = 0.1;  // direct-loss methods only
  double learning_rate = 0.1;
  double l2_weight = 0.0;
  int iterations = 300;
  int batch_size = 0;  // 0 trains on the full set every iteration
  std::uint64_t seed = 0;
  int eval_every = 0;  // 0 logs only the initial and final evaluations
};

/// One batch: ascending row indices into a shared feature/label store.
struct StepContext {
  const Matrix& features;
  std::span<const std::uint8_t> labels;
  std::span<const int> rows;
};

/// skipped means the batch cannot support the method (single-class batch for
/// a ranking-loss step); no update should be applied. objective is the
/// method's per-step quantity: the loss-augmented maximum for direct steps,
/// the violation for hinge and perceptron steps, mean cross-entropy for xent.
struct StepResult {
  bool skipped = false;
  double objective = 0.0;
  MlpGrad grad;
};

/// Ranking direct-loss step: scores the batch, finds the plain argmax and the
/// loss-augmented argmax, and returns +-(1/epsilon) times the difference of
/// the score-function gradients, plus the L2 term.
StepResult direct_loss_step_ap(const MlpParams& params, const StepContext& ctx,
                               const TrainConfig& cfg);

/// Classification direct-loss step over the decomposable score
/// F = (1/N) sum_i yhat_i phi_i with yhat in {-1,+1}; the loss-augmented
/// argmax decomposes per sample (ties resolved to +1).
StepResult direct_loss_step_01(const MlpParams& params, const StepContext& ctx,
                               const TrainConfig& cfg);

/// Margin-rescaled structured hinge with unit loss scale: gradient is the
/// difference between the loss-augmented solution and the ground truth when
/// F(aug) + L(aug) > F(gt), else only the L2 term.
StepResult hinge_step(const MlpParams& params, const StepContext& ctx,
                      const TrainConfig& cfg, TaskLoss task);

/// Structured perceptron: difference between the current prediction and the
/// ground truth.
StepResult perceptron_step(const MlpParams& params, const StepContext& ctx,
                           const TrainConfig& cfg, TaskLoss task);

/// Mean binary cross-entropy through a sigmoid.
StepResult cross_entropy_step(const MlpParams& params, const StepContext& ctx,
                              const TrainConfig& cfg);

/// Dispatches to the step for cfg.method.
StepResult train_step(const MlpParams& params, const StepContext& ctx,
                      const TrainConfig& cfg);

struct RunRow {
  int iter = 0;
  double train_ap = 0.0;
  double test_ap = 0.0;
  double objective = 0.0;
  double wall_ms = 0.0;
};

struct RunLog {
  std::vector<RunRow> rows;
  int skipped_steps = 0;

  const RunRow& final_row() const { return rows.back(); }

  /// Header iter,train_ap,test_ap,objective,wall_ms. Timing is written as 0
  /// unless include_timing is set, keeping identical reruns byte-identical.
  void write_csv(std::ostream& os, bool include_timing = false) const;
};

/// Plain SGD for cfg.iterations steps: sample a batch (full set when
/// batch_size is 0, else a fresh seeded draw each iteration), take the
/// method's step, update params in place. Logs the evaluation at iteration 0,
/// every eval_every steps, and after the final step. Single-class batches are
/// skipped and counted.
RunLog run_training(const Dataset& train, const Dataset& test,
                    MlpParams& params, const TrainConfig& cfg);

}  // namespace directrank

#endif  // DIRECTRANK_TRAINERS_HPP
