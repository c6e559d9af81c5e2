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

#include <benchmark/benchmark.h>

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "directrank/inference.hpp"
#include "directrank/mlp.hpp"
#include "directrank/ranking.hpp"
#include "directrank/rng.hpp"
#include "directrank/trainers.hpp"

namespace dr = directrank;

namespace {

dr::RankingInstance square_instance(int half, std::uint64_t seed) {
  dr::Rng rng(seed);
  std::vector<double> pos(static_cast<std::size_t>(half));
  std::vector<double> neg(static_cast<std::size_t>(half));
  for (double& v : pos) v = rng.normal();
  for (double& v : neg) v = rng.normal();
  return dr::RankingInstance::from_class_scores(std::move(pos), std::move(neg));
}

void BM_LossAugmentedInference(benchmark::State& state) {
  const int half = static_cast<int>(state.range(0));
  const dr::RankingInstance inst = square_instance(half, 42);
  const dr::LossAugConfig cfg{1.0, dr::Sign::Positive};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dr::dp_loss_augmented(inst, cfg));
  }
  state.SetComplexityN(half);
}
BENCHMARK(BM_LossAugmentedInference)
    ->Arg(125)
    ->Arg(250)
    ->Arg(500)
    ->Arg(1000)
    ->Complexity(benchmark::oNSquared);

void BM_StandardInference(benchmark::State& state) {
  const int half = static_cast<int>(state.range(0));
  const dr::RankingInstance inst = square_instance(half, 43);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dr::standard_inference(inst));
  }
}
BENCHMARK(BM_StandardInference)->Arg(1000);

void BM_MlpForwardBatch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<int> dims = {10, 32, 32, 32, 32, 1};
  const dr::MlpParams net = dr::mlp_init(dims, 7);
  dr::Rng rng(8);
  dr::Matrix features(n, 10);
  for (double& v : features.data) v = rng.normal();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dr::score_all(net, features));
  }
}
BENCHMARK(BM_MlpForwardBatch)->Arg(256)->Arg(2000);

void BM_MlpCoeffGradBatch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<int> dims = {10, 32, 32, 32, 32, 1};
  const dr::MlpParams net = dr::mlp_init(dims, 9);
  dr::Rng rng(10);
  dr::Matrix features(n, 10);
  for (double& v : features.data) v = rng.normal();
  std::vector<int> rows(static_cast<std::size_t>(n));
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<double> coeffs(static_cast<std::size_t>(n));
  for (double& c : coeffs) c = rng.normal();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dr::grad_with_coeffs(net, features, rows, coeffs));
  }
}
BENCHMARK(BM_MlpCoeffGradBatch)->Arg(256)->Arg(2000);

void BM_FullTrainStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<int> dims = {10, 32, 32, 32, 32, 1};
  dr::Rng rng(11);
  dr::Matrix features(n, 10);
  for (double& v : features.data) v = rng.normal();
  std::vector<std::uint8_t> labels(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i % 5 == 0;
  std::vector<int> rows(static_cast<std::size_t>(n));
  std::iota(rows.begin(), rows.end(), 0);

  const dr::MlpParams net = dr::mlp_init(dims, 12);
  const dr::StepContext ctx{features, labels, rows};
  dr::TrainConfig cfg;
  cfg.method = dr::Method::PosAp;
  cfg.epsilon = 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dr::train_step(net, ctx, cfg));
  }
}
BENCHMARK(BM_FullTrainStep)->Arg(256)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
