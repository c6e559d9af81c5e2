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

#include "directrank/trainers.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>

#include "directrank/errors.hpp"
#include "directrank/inference.hpp"
#include "directrank/metrics.hpp"
#include "directrank/ranking.hpp"
#include "directrank/rng.hpp"
#include "directrank/text.hpp"

namespace directrank {

namespace {

struct MethodInfo {
  Method method;
  std::string_view name;
  bool direct;
  TaskLoss task;
};

constexpr MethodInfo kMethods[] = {
    {Method::PosAp, "pos-ap", true, TaskLoss::Ap},
    {Method::NegAp, "neg-ap", true, TaskLoss::Ap},
    {Method::Pos01, "pos-01", true, TaskLoss::ZeroOne},
    {Method::Neg01, "neg-01", true, TaskLoss::ZeroOne},
    {Method::HingeAp, "hinge-ap", false, TaskLoss::Ap},
    {Method::Hinge01, "hinge-01", false, TaskLoss::ZeroOne},
    {Method::PerAp, "per-ap", false, TaskLoss::Ap},
    {Method::Per01, "per-01", false, TaskLoss::ZeroOne},
    {Method::Xent, "xent", false, TaskLoss::ZeroOne},
};

const MethodInfo& info_for(Method m) {
  for (const MethodInfo& info : kMethods)
    if (info.method == m) return info;
  throw InvalidConfig("unknown method");
}

double stable_sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double softplus(double x) {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

std::vector<double> batch_scores(const MlpParams& params, const StepContext& ctx) {
  std::vector<double> scores;
  scores.reserve(ctx.rows.size());
  ForwardCache cache;
  for (int r : ctx.rows)
    scores.push_back(mlp_forward(params, ctx.features.row(r), cache));
  return scores;
}

std::vector<std::uint8_t> batch_labels(const StepContext& ctx) {
  std::vector<std::uint8_t> labels;
  labels.reserve(ctx.rows.size());
  for (int r : ctx.rows) labels.push_back(ctx.labels[r]);
  return labels;
}

bool single_class(std::span<const std::uint8_t> labels) {
  int pos = 0;
  for (std::uint8_t l : labels) pos += l;
  return pos == 0 || pos == static_cast<int>(labels.size());
}

StepResult finish(const MlpParams& params, const StepContext& ctx,
                  const TrainConfig& cfg, std::span<const double> coeffs,
                  double objective) {
  StepResult r;
  r.objective = objective;
  r.grad = grad_with_coeffs(params, ctx.features, ctx.rows, coeffs);
  add_l2(r.grad, params, cfg.l2_weight);
  return r;
}

StepResult skipped_step() {
  StepResult r;
  r.skipped = true;
  return r;
}

// Per-sample argmax over yhat in {-1,+1} of yhat*phi + loss_scale*[yhat != y],
// ties resolved to +1.
int augmented_sign(double phi, int y, double loss_scale) {
  const double take_pos = phi + (y == 1 ? 0.0 : loss_scale);
  const double take_neg = -phi + (y == -1 ? 0.0 : loss_scale);
  return take_pos >= take_neg ? 1 : -1;
}

}  // namespace

std::string_view method_name(Method m) { return info_for(m).name; }

Method parse_method(std::string_view name) {
  for (const MethodInfo& info : kMethods)
    if (info.name == name) return info.method;
  throw InvalidConfig("unknown method: " + std::string(name));
}

bool is_direct_method(Method m) { return info_for(m).direct; }

TaskLoss method_task(Method m) { return info_for(m).task; }

StepResult direct_loss_step_ap(const MlpParams& params, const StepContext& ctx,
                               const TrainConfig& cfg) {
  if (!(cfg.epsilon > 0.0)) throw InvalidConfig("epsilon must be positive");
  const std::vector<std::uint8_t> labels = batch_labels(ctx);
  if (single_class(labels)) return skipped_step();
  const std::vector<double> scores = batch_scores(params, ctx);

  const Sign sign =
      cfg.method == Method::NegAp ? Sign::Negative : Sign::Positive;
  const double s = sign == Sign::Positive ? 1.0 : -1.0;
  const RankingInstance inst = RankingInstance::from_scores(scores, labels);
  const Interleaving y_w = merge_by_score(inst);
  const InferenceResult direct =
      dp_loss_augmented(inst, {.epsilon = cfg.epsilon, .sign = sign});

  const std::vector<double> c_direct = sample_coeffs(inst, direct.y);
  const std::vector<double> c_w = sample_coeffs(inst, y_w);
  std::vector<double> coeffs(c_direct.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] = s * (c_direct[i] - c_w[i]) / cfg.epsilon;
  return finish(params, ctx, cfg, coeffs, direct.objective);
}

StepResult direct_loss_step_01(const MlpParams& params, const StepContext& ctx,
                               const TrainConfig& cfg) {
  if (!(cfg.epsilon > 0.0)) throw InvalidConfig("epsilon must be positive");
  const std::vector<double> scores = batch_scores(params, ctx);
  const double n = static_cast<double>(ctx.rows.size());
  const double s = cfg.method == Method::Neg01 ? -1.0 : 1.0;

  std::vector<double> coeffs(scores.size());
  double f_direct = 0.0;
  double mismatches = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const int y = ctx.labels[ctx.rows[i]] ? 1 : -1;
    const int y_w = scores[i] >= 0.0 ? 1 : -1;
    const int y_direct = augmented_sign(scores[i], y, s * cfg.epsilon);
    coeffs[i] = s * (y_direct - y_w) / (cfg.epsilon * n);
    f_direct += y_direct * scores[i] / n;
    mismatches += (y_direct != y);
  }
  const double objective = f_direct + s * cfg.epsilon * mismatches / n;
  return finish(params, ctx, cfg, coeffs, objective);
}

StepResult hinge_step(const MlpParams& params, const StepContext& ctx,
                      const TrainConfig& cfg, TaskLoss task) {
  const std::vector<std::uint8_t> labels = batch_labels(ctx);
  if (task == TaskLoss::Ap && single_class(labels)) return skipped_step();
  const std::vector<double> scores = batch_scores(params, ctx);
  std::vector<double> coeffs(scores.size(), 0.0);
  double violation = 0.0;

  if (task == TaskLoss::Ap) {
    const RankingInstance inst = RankingInstance::from_scores(scores, labels);
    const Interleaving y_gt =
        Interleaving::all_pos_first(inst.num_pos(), inst.num_neg());
    const InferenceResult aug =
        dp_loss_augmented(inst, {.epsilon = 1.0, .sign = Sign::Positive});
    violation = aug.objective - score_F(inst, y_gt);
    if (violation > 0.0) {
      const std::vector<double> c_aug = sample_coeffs(inst, aug.y);
      const std::vector<double> c_gt = sample_coeffs(inst, y_gt);
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] = c_aug[i] - c_gt[i];
    }
  } else {
    const double n = static_cast<double>(scores.size());
    double f_aug = 0.0, f_gt = 0.0, mismatches = 0.0;
    std::vector<int> y_aug(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
      const int y = labels[i] ? 1 : -1;
      y_aug[i] = augmented_sign(scores[i], y, 1.0);
      f_aug += y_aug[i] * scores[i] / n;
      f_gt += y * scores[i] / n;
      mismatches += (y_aug[i] != y);
    }
    violation = f_aug + mismatches / n - f_gt;
    if (violation > 0.0)
      for (std::size_t i = 0; i < scores.size(); ++i)
        coeffs[i] = (y_aug[i] - (labels[i] ? 1 : -1)) / n;
  }
  return finish(params, ctx, cfg, coeffs, violation > 0.0 ? violation : 0.0);
}

StepResult perceptron_step(const MlpParams& params, const StepContext& ctx,
                           const TrainConfig& cfg, TaskLoss task) {
  const std::vector<std::uint8_t> labels = batch_labels(ctx);
  if (task == TaskLoss::Ap && single_class(labels)) return skipped_step();
  const std::vector<double> scores = batch_scores(params, ctx);
  std::vector<double> coeffs(scores.size(), 0.0);
  double objective = 0.0;

  if (task == TaskLoss::Ap) {
    const RankingInstance inst = RankingInstance::from_scores(scores, labels);
    const Interleaving y_gt =
        Interleaving::all_pos_first(inst.num_pos(), inst.num_neg());
    const Interleaving y_w = merge_by_score(inst);
    objective = score_F(inst, y_w) - score_F(inst, y_gt);
    const std::vector<double> c_w = sample_coeffs(inst, y_w);
    const std::vector<double> c_gt = sample_coeffs(inst, y_gt);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      coeffs[i] = c_w[i] - c_gt[i];
  } else {
    const double n = static_cast<double>(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
      const int y = labels[i] ? 1 : -1;
      const int y_w = scores[i] >= 0.0 ? 1 : -1;
      coeffs[i] = (y_w - y) / n;
      objective += (y_w - y) * scores[i] / n;
    }
  }
  return finish(params, ctx, cfg, coeffs, objective);
}

StepResult cross_entropy_step(const MlpParams& params, const StepContext& ctx,
                              const TrainConfig& cfg) {
  const std::vector<double> scores = batch_scores(params, ctx);
  const double n = static_cast<double>(scores.size());
  std::vector<double> coeffs(scores.size());
  double objective = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double y = ctx.labels[ctx.rows[i]] ? 1.0 : 0.0;
    coeffs[i] = (stable_sigmoid(scores[i]) - y) / n;
    objective += (softplus(scores[i]) - y * scores[i]) / n;
  }
  return finish(params, ctx, cfg, coeffs, objective);
}

StepResult train_step(const MlpParams& params, const StepContext& ctx,
                      const TrainConfig& cfg) {
  if (ctx.rows.empty()) throw InvalidInput("empty batch");
  switch (cfg.method) {
    case Method::PosAp:
    case Method::NegAp:
      return direct_loss_step_ap(params, ctx, cfg);
    case Method::Pos01:
    case Method::Neg01:
      return direct_loss_step_01(params, ctx, cfg);
    case Method::HingeAp:
      return hinge_step(params, ctx, cfg, TaskLoss::Ap);
    case Method::Hinge01:
      return hinge_step(params, ctx, cfg, TaskLoss::ZeroOne);
    case Method::PerAp:
      return perceptron_step(params, ctx, cfg, TaskLoss::Ap);
    case Method::Per01:
      return perceptron_step(params, ctx, cfg, TaskLoss::ZeroOne);
    case Method::Xent:
      return cross_entropy_step(params, ctx, cfg);
  }
  throw InvalidConfig("unknown method");
}

void RunLog::write_csv(std::ostream& os, bool include_timing) const {
  os << "iter,train_ap,test_ap,objective,wall_ms\n";
  for (const RunRow& row : rows) {
    os << row.iter << ',' << format_double(row.train_ap) << ','
       << format_double(row.test_ap) << ',' << format_double(row.objective)
       << ',' << (include_timing ? format_double(row.wall_ms) : "0") << '\n';
  }
}

namespace {

void validate_config(const TrainConfig& cfg, int train_size) {
  if (!(cfg.learning_rate >= 0.0) || !std::isfinite(cfg.learning_rate))
    throw InvalidConfig("learning rate must be finite and nonnegative");
  if (!(cfg.l2_weight >= 0.0) || !std::isfinite(cfg.l2_weight))
    throw InvalidConfig("l2 weight must be finite and nonnegative");
  if (cfg.iterations < 1) throw InvalidConfig("iterations must be positive");
  if (cfg.batch_size < 0 || cfg.batch_size > train_size)
    throw InvalidConfig("batch size must be 0 (full) or within the train set");
  if (cfg.eval_every < 0) throw InvalidConfig("eval_every must be nonnegative");
  if (is_direct_method(cfg.method) &&
      (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon)))
    throw InvalidConfig("direct-loss methods need a positive epsilon");
}

}  // namespace

RunLog run_training(const Dataset& train, const Dataset& test,
                    MlpParams& params, const TrainConfig& cfg) {
  validate_config(cfg, train.size());
  if (train.dim() != test.dim())
    throw InvalidInput("train and test feature widths differ");
  if (train.dim() != params.input_dim())
    throw InvalidInput("feature width does not match network");
  train.require_both_classes();
  test.require_both_classes();

  const auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  };
  auto evaluate = [&](int iter, double objective, RunLog& log) {
    RunRow row;
    row.iter = iter;
    row.train_ap = average_precision(score_all(params, train.features), train.labels);
    row.test_ap = average_precision(score_all(params, test.features), test.labels);
    row.objective = objective;
    row.wall_ms = elapsed_ms();
    log.rows.push_back(row);
  };

  RunLog log;
  evaluate(0, 0.0, log);

  std::vector<int> full_rows(static_cast<std::size_t>(train.size()));
  std::iota(full_rows.begin(), full_rows.end(), 0);
  Rng batch_rng(derive_seed(cfg.seed, 1));

  for (int t = 1; t <= cfg.iterations; ++t) {
    std::vector<int> batch;
    if (cfg.batch_size > 0)
      batch = sample_without_replacement(train.size(), cfg.batch_size, batch_rng);
    const StepContext ctx{train.features, train.labels,
                          cfg.batch_size > 0 ? std::span<const int>(batch)
                                             : std::span<const int>(full_rows)};
    const StepResult step = train_step(params, ctx, cfg);
    if (step.skipped)
      ++log.skipped_steps;
    else
      apply_step(params, step.grad, cfg.learning_rate);
    if (t == cfg.iterations || (cfg.eval_every > 0 && t % cfg.eval_every == 0))
      evaluate(t, step.objective, log);
  }
  return log;
}

}  // namespace directrank
