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

// Release gate. Runs ten independent checks spanning exact inference,
// gradient correctness, speed, end-to-end training quality, and reproducible
// output, printing one verdict line per check.
//
// Usage: directrank_acceptance <cli-binary> [criterion-number]

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "directrank/certify.hpp"
#include "directrank/inference.hpp"
#include "directrank/metrics.hpp"
#include "directrank/mlp.hpp"
#include "directrank/ranking.hpp"
#include "directrank/rng.hpp"
#include "directrank/synthdata.hpp"
#include "directrank/trainers.hpp"

namespace dr = directrank;
namespace fs = std::filesystem;

namespace {

std::string g_cli;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::vector<double*> param_coords(dr::MlpParams& p) {
  std::vector<double*> out;
  out.reserve(p.num_params());
  for (int l = 0; l < p.num_layers(); ++l) {
    for (double& v : p.weights[l].data) out.push_back(&v);
    for (double& v : p.biases[l]) out.push_back(&v);
  }
  return out;
}

std::vector<double> grad_coords(const dr::MlpGrad& g) {
  std::vector<double> out;
  for (std::size_t l = 0; l < g.weights.size(); ++l) {
    out.insert(out.end(), g.weights[l].data.begin(), g.weights[l].data.end());
    out.insert(out.end(), g.biases[l].begin(), g.biases[l].end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1. The dynamic program against exhaustive interleaving enumeration.

Outcome check_dp_against_enumeration() {
  const auto start = std::chrono::steady_clock::now();
  dr::OracleCheckOptions opts;  // 6 x 6, 50 trials, eps {0.01, 0.1, 1, 10}
  const dr::OracleCheckReport report = dr::run_oracle_check(opts);
  const double elapsed = seconds_since(start);

  Outcome o;
  o.pass = report.passed() && elapsed < 60.0;
  o.detail = std::to_string(report.checks) + " checks, max dev " +
             fmt("%.2e", report.max_deviation) + ", " + fmt("%.1f", elapsed) +
             "s";
  if (!report.first_failure.empty())
    o.detail += "; first failure: " + report.first_failure;
  return o;
}

// ---------------------------------------------------------------------------
// 2. No ordering of the individual samples beats the interleaving optimum.

Outcome check_full_permutation_bound() {
  const auto start = std::chrono::steady_clock::now();
  dr::OracleCheckOptions opts;
  opts.trials = 20;
  opts.eps_grid = {0.1, 1.0};
  opts.full_perm = true;
  opts.full_perm_limit = 7;
  opts.seed = 8;
  const dr::OracleCheckReport report = dr::run_oracle_check(opts);
  const double elapsed = seconds_since(start);

  Outcome o;
  o.pass = report.passed() && elapsed < 120.0;
  o.detail = std::to_string(report.checks) + " checks, max dev " +
             fmt("%.2e", report.max_deviation) + ", " + fmt("%.1f", elapsed) +
             "s";
  if (!report.first_failure.empty())
    o.detail += "; first failure: " + report.first_failure;
  return o;
}

// ---------------------------------------------------------------------------
// 3. Each backtracked solution attains its table value at every prefix,
//    recomputed from raw scores rather than the table's own increments.

Outcome check_prefix_attainment() {
  const auto start = std::chrono::steady_clock::now();
  dr::Rng rng(7);  // same instance stream as check 1
  const std::vector<double> eps_grid = {0.01, 0.1, 1.0, 10.0};
  long long prefixes = 0;
  double max_dev = 0.0;

  for (int p = 1; p <= 6; ++p)
    for (int n = 1; n <= 6; ++n)
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> pos(static_cast<std::size_t>(p));
        std::vector<double> neg(static_cast<std::size_t>(n));
        for (double& v : pos) v = rng.normal();
        for (double& v : neg) v = rng.normal();
        const dr::RankingInstance inst =
            dr::RankingInstance::from_class_scores(std::move(pos),
                                                   std::move(neg));
        for (double eps : eps_grid)
          for (dr::Sign sign : {dr::Sign::Positive, dr::Sign::Negative}) {
            const dr::LossAugConfig cfg{eps, sign};
            const double flag = sign == dr::Sign::Positive ? -1.0 : 1.0;
            const dr::DpState state = dr::dp_fill(inst, cfg);
            const dr::Interleaving y = dr::dp_backtrack(state);

            const double scale = 1.0 / (static_cast<double>(p) * n);
            double value = 0.0;
            int i = 0;
            int j = 0;
            for (const dr::Entry e : y.bits) {
              if (e == dr::Entry::Pos) {
                ++i;
                for (int t = 0; t < j; ++t)
                  value -=
                      scale * (inst.pos_scores[i - 1] - inst.neg_scores[t]);
                value += flag * eps / p * (static_cast<double>(i) / (i + j));
              } else {
                ++j;
                for (int s = 0; s < i; ++s)
                  value +=
                      scale * (inst.pos_scores[s] - inst.neg_scores[j - 1]);
              }
              max_dev = std::max(max_dev, std::abs(value - state.h(i, j)));
              ++prefixes;
            }
          }
      }
  const double elapsed = seconds_since(start);

  Outcome o;
  o.pass = max_dev <= 1e-9;
  o.detail = std::to_string(prefixes) + " prefixes, max dev " +
             fmt("%.2e", max_dev) + ", " + fmt("%.1f", elapsed) + "s";
  return o;
}

// ---------------------------------------------------------------------------
// 4. The step gradient is the slope of the finite-difference ramp objective
//    wherever both argmaxes are stable under the probe.

Outcome check_ramp_gradient() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<int> dims = {4, 6, 5, 1};
  const std::vector<std::uint8_t> labels = {1, 1, 1, 0, 0, 0, 0};
  const std::vector<int> rows = {0, 1, 2, 3, 4, 5, 6};
  const double delta = 1e-5;

  dr::Rng rng(211);
  int accepted = 0;
  int attempts = 0;
  double worst_rel = 0.0;

  while (accepted < 100 && attempts < 400) {
    ++attempts;
    const dr::Method method =
        attempts % 2 == 0 ? dr::Method::PosAp : dr::Method::NegAp;
    const double eps = attempts % 4 < 2 ? 0.1 : 1.0;
    const dr::Sign sign = method == dr::Method::PosAp ? dr::Sign::Positive
                                                      : dr::Sign::Negative;
    const double s = method == dr::Method::PosAp ? 1.0 : -1.0;

    dr::MlpParams net = dr::mlp_init(dims, rng.next_u64());
    dr::Matrix features(7, 4);
    for (double& v : features.data) v = rng.normal();

    // Stay away from rectifier kinks so the probe moves along one face.
    bool near_kink = false;
    dr::ForwardCache cache;
    for (int r = 0; r < features.rows && !near_kink; ++r) {
      dr::mlp_forward(net, features.row(r), cache);
      for (std::size_t l = 0; l + 1 < cache.pre.size() && !near_kink; ++l)
        for (double z : cache.pre[l])
          if (std::abs(z) < 1e-3) near_kink = true;
    }
    if (near_kink) continue;

    const dr::StepContext ctx{features, labels, rows};
    dr::TrainConfig cfg;
    cfg.method = method;
    cfg.epsilon = eps;
    const std::vector<double> analytic =
        grad_coords(dr::direct_loss_step_ap(net, ctx, cfg).grad);

    auto solve = [&] {
      const dr::RankingInstance inst = dr::RankingInstance::from_scores(
          dr::score_all(net, features), labels);
      const dr::Interleaving y_w = dr::merge_by_score(inst);
      const dr::InferenceResult direct = dr::dp_loss_augmented(inst, {eps, sign});
      const double ramp = s * (direct.objective - dr::score_F(inst, y_w)) / eps;
      return std::tuple(ramp, y_w, direct.y);
    };

    const auto [ramp0, w0, d0] = solve();
    (void)ramp0;
    const std::vector<double*> coords = param_coords(net);
    std::vector<double> fd(coords.size());
    bool stable = true;
    for (std::size_t k = 0; k < coords.size() && stable; ++k) {
      const double orig = *coords[k];
      *coords[k] = orig + delta;
      const auto [hi, w_hi, d_hi] = solve();
      *coords[k] = orig - delta;
      const auto [lo, w_lo, d_lo] = solve();
      *coords[k] = orig;
      stable = w_hi == w0 && w_lo == w0 && d_hi == d0 && d_lo == d0;
      fd[k] = (hi - lo) / (2.0 * delta);
    }
    if (!stable) continue;

    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < coords.size(); ++k) {
      num += (fd[k] - analytic[k]) * (fd[k] - analytic[k]);
      den += fd[k] * fd[k];
    }
    // A coinciding pair of argmaxes makes the ramp locally constant; the
    // floor keeps probe rounding noise from dominating the zero gradient.
    const double rel = std::sqrt(num) / std::max(std::sqrt(den), 1e-3);
    worst_rel = std::max(worst_rel, rel);
    ++accepted;
  }
  const double elapsed = seconds_since(start);

  Outcome o;
  o.pass = accepted >= 100 && worst_rel <= 1e-4;
  o.detail = std::to_string(accepted) + " stable points of " +
             std::to_string(attempts) + " draws, worst rel " +
             fmt("%.2e", worst_rel) + ", " + fmt("%.1f", elapsed) + "s";
  return o;
}

// ---------------------------------------------------------------------------
// 5. Backprop against central differences, coordinate by coordinate, on
//    networks with four rectified hidden layers.

Outcome check_backprop_finite_difference() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<int> dims = {5, 8, 8, 8, 8, 1};
  const double delta = 1e-5;
  dr::Rng rng(223);

  long long checked = 0;
  long long excluded = 0;
  double worst_rel = 0.0;

  auto pattern = [](const dr::MlpParams& p, std::span<const double> x,
                    double* min_abs) {
    dr::ForwardCache cache;
    dr::mlp_forward(p, x, cache);
    std::vector<int> bits;
    for (std::size_t l = 0; l + 1 < cache.pre.size(); ++l)
      for (double z : cache.pre[l]) {
        bits.push_back(z > 0.0 ? 1 : 0);
        *min_abs = std::min(*min_abs, std::abs(z));
      }
    return bits;
  };

  for (int net_id = 0; net_id < 10; ++net_id) {
    dr::MlpParams net = dr::mlp_init(dims, rng.next_u64());
    std::vector<double> x(5);
    for (double& v : x) v = rng.normal();

    dr::ForwardCache cache;
    dr::mlp_forward(net, x, cache);
    dr::MlpGrad g = dr::MlpGrad::zeros_like(net);
    dr::BackpropScratch scratch;
    dr::mlp_backward_accum(net, cache, 1.0, g, scratch);
    const std::vector<double> analytic = grad_coords(g);

    double gmax = 0.0;
    for (double v : analytic) gmax = std::max(gmax, std::abs(v));

    const std::vector<double*> coords = param_coords(net);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      double min_abs = 1e300;
      const std::vector<int> center = pattern(net, x, &min_abs);
      const double orig = *coords[k];
      *coords[k] = orig + delta;
      const std::vector<int> hi_pat = pattern(net, x, &min_abs);
      const double hi = dr::mlp_forward(net, x);
      *coords[k] = orig - delta;
      const std::vector<int> lo_pat = pattern(net, x, &min_abs);
      const double lo = dr::mlp_forward(net, x);
      *coords[k] = orig;

      if (hi_pat != center || lo_pat != center || min_abs < 1e-8) {
        ++excluded;
        continue;
      }
      const double fd = (hi - lo) / (2.0 * delta);
      const double denom =
          std::max({std::abs(fd), std::abs(analytic[k]), 1e-4 * gmax});
      worst_rel = std::max(worst_rel, std::abs(fd - analytic[k]) / denom);
      ++checked;
    }
  }
  const double elapsed = seconds_since(start);

  Outcome o;
  o.pass = worst_rel <= 1e-6 && checked > 1000;
  o.detail = std::to_string(checked) + " coordinates (" +
             std::to_string(excluded) + " kink-adjacent excluded), worst rel " +
             fmt("%.2e", worst_rel) + ", " + fmt("%.1f", elapsed) + "s";
  return o;
}

// ---------------------------------------------------------------------------
// 6. Inference speed and its quadratic growth.

Outcome check_inference_speed() {
  auto make_instance = [](int half, std::uint64_t seed) {
    dr::Rng rng(seed);
    std::vector<double> pos(static_cast<std::size_t>(half));
    std::vector<double> neg(static_cast<std::size_t>(half));
    for (double& v : pos) v = rng.normal();
    for (double& v : neg) v = rng.normal();
    return dr::RankingInstance::from_class_scores(std::move(pos),
                                                  std::move(neg));
  };
  const dr::RankingInstance small = make_instance(500, 31);
  const dr::RankingInstance large = make_instance(1000, 32);
  const dr::LossAugConfig cfg{1.0, dr::Sign::Positive};

  auto time_once = [&](const dr::RankingInstance& inst) {
    const auto start = std::chrono::steady_clock::now();
    const dr::InferenceResult r = dr::dp_loss_augmented(inst, cfg);
    const double t = seconds_since(start);
    return std::isfinite(r.objective) ? t : 1e9;
  };

  (void)time_once(small);  // warm up
  (void)time_once(large);
  std::array<double, 9> small_times{};
  std::array<double, 9> large_times{};
  for (int rep = 0; rep < 9; ++rep) {  // interleaved against clock drift
    small_times[static_cast<std::size_t>(rep)] = time_once(small);
    large_times[static_cast<std::size_t>(rep)] = time_once(large);
  }
  std::sort(small_times.begin(), small_times.end());
  std::sort(large_times.begin(), large_times.end());
  const double t_small = small_times[4];
  const double t_large = large_times[4];
  const double ratio = t_large / t_small;

  Outcome o;
  o.pass = t_large < 1.0 && ratio >= 3.0 && ratio <= 5.5;
  o.detail = "1000x1000 " + fmt("%.1f", t_large * 1e3) + "ms, 500x500 " +
             fmt("%.1f", t_small * 1e3) + "ms, ratio " + fmt("%.2f", ratio);
  return o;
}

// ---------------------------------------------------------------------------
// Training helpers for the two end-to-end quality checks.

double final_test_ap(const dr::Dataset& train, const dr::Dataset& test,
                     dr::Method method, double lr, double epsilon,
                     const std::vector<int>& dims, std::uint64_t seed) {
  // Stream 4 keeps student nets clear of the teacher's parameter stream.
  dr::MlpParams params = dr::mlp_init(dims, dr::derive_seed(seed, 4));
  dr::TrainConfig cfg;
  cfg.method = method;
  cfg.epsilon = epsilon;
  cfg.learning_rate = lr;
  cfg.l2_weight = 1e-7;
  cfg.iterations = 300;
  cfg.batch_size = 0;
  cfg.seed = seed;
  cfg.eval_every = 0;
  const dr::RunLog log = dr::run_training(train, test, params, cfg);
  return log.final_row().test_ap;
}

struct GridSpec {
  dr::Method method;
  double epsilon;
  std::array<double, 3> lrs;
};

double best_over_grid(const dr::Dataset& train, const dr::Dataset& test,
                      const GridSpec& spec, const std::vector<int>& dims,
                      std::uint64_t seed) {
  double best = -1.0;
  for (double lr : spec.lrs)
    best = std::max(best, final_test_ap(train, test, spec.method, lr,
                                        spec.epsilon, dims, seed));
  return best;
}

// ---------------------------------------------------------------------------
// 7. On clean teacher data the raised-loss ranking method beats the
//    decomposable baselines and at least matches the structured hinge.

Outcome check_clean_data_ranking() {
  const auto start = std::chrono::steady_clock::now();
  const dr::Dataset whole = dr::gen_teacher(4000, 10, 32, 0.2, 1);
  const auto [train, test] = dr::split(whole, 0.5, dr::derive_seed(1, 3));
  const std::vector<int> dims = {10, 32, 32, 32, 32, 1};

  const GridSpec pos_grid{dr::Method::PosAp, 0.1, {0.3, 1.0, 3.0}};
  const GridSpec hinge_grid{dr::Method::HingeAp, 1.0, {0.001, 0.003, 0.01}};
  const GridSpec xent_grid{dr::Method::Xent, 1.0, {0.001, 0.003, 0.01}};
  const GridSpec per_grid{dr::Method::PerAp, 1.0, {0.001, 0.003, 0.01}};

  int passes = 0;
  double sum_pos = 0.0, sum_hinge = 0.0, sum_xent = 0.0, sum_per = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const double ap_pos = best_over_grid(train, test, pos_grid, dims, seed);
    const double ap_hinge = best_over_grid(train, test, hinge_grid, dims, seed);
    const double ap_xent = best_over_grid(train, test, xent_grid, dims, seed);
    const double ap_per = best_over_grid(train, test, per_grid, dims, seed);
    sum_pos += ap_pos;
    sum_hinge += ap_hinge;
    sum_xent += ap_xent;
    sum_per += ap_per;
    const bool ok = ap_pos >= ap_hinge && ap_pos >= ap_xent + 0.01 &&
                    ap_pos >= ap_per + 0.01;
    passes += ok;
  }
  const double elapsed = seconds_since(start);

  Outcome o;
  o.pass = passes >= 3 && elapsed < 900.0;
  o.detail = std::to_string(passes) + "/5 seeds, mean ap: raised " +
             fmt("%.3f", sum_pos / 5) + ", hinge " + fmt("%.3f", sum_hinge / 5) +
             ", xent " + fmt("%.3f", sum_xent / 5) + ", perceptron " +
             fmt("%.3f", sum_per / 5) + ", " + fmt("%.0f", elapsed) + "s";
  return o;
}

// ---------------------------------------------------------------------------
// 8. Under training-label noise the raised-loss method keeps a margin over
//    the structured hinge.

Outcome check_noise_robustness() {
  const auto start = std::chrono::steady_clock::now();
  const dr::Dataset clean_train = dr::gen_norm_threshold(1000, 10, 10.0, 1200.0, 1000.0, 101);
  const dr::Dataset test = dr::gen_norm_threshold(1000, 10, 10.0, 1200.0, 1000.0, 202);
  const std::vector<int> dims = {10, 32, 32, 32, 32, 1};
  const double pos_lr = 0.3;
  const double pos_eps = 10.0;
  const double hinge_lr = 0.001;

  const std::vector<double> flips = {0.1, 0.2, 0.3};
  std::vector<int> wins(flips.size(), 0);
  std::vector<double> margin_sum(flips.size(), 0.0);
  for (std::size_t fi = 0; fi < flips.size(); ++fi) {
    const dr::Dataset train =
        dr::flip_labels(clean_train, flips[fi], dr::derive_seed(7, 100 + fi));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const double ap_pos = final_test_ap(train, test, dr::Method::PosAp,
                                          pos_lr, pos_eps, dims, seed);
      const double ap_hinge = final_test_ap(train, test, dr::Method::HingeAp,
                                            hinge_lr, 1.0, dims, seed);
      margin_sum[fi] += ap_pos - ap_hinge;
      wins[fi] += ap_pos - ap_hinge >= 0.03;
    }
  }
  const double elapsed = seconds_since(start);

  Outcome o;
  o.pass = wins[1] >= 3 && wins[2] >= 3 && elapsed < 600.0;
  std::ostringstream d;
  for (std::size_t fi = 0; fi < flips.size(); ++fi)
    d << "flip " << flips[fi] << ": " << wins[fi] << "/5 seeds, mean margin "
      << fmt("%.3f", margin_sum[fi] / 5) << "; ";
  d << fmt("%.0f", elapsed) << "s";
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------------------
// 9. The reported metric is exactly one minus the training loss.

Outcome check_metric_identity() {
  dr::Rng rng(311);
  long long mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(60));
    std::vector<double> scores(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(n));
    int pos = 0;
    for (int i = 0; i < n; ++i) {
      scores[i] = rng.normal();
      labels[i] = rng.below(2) != 0;
      pos += labels[i];
    }
    if (pos == 0) labels[static_cast<std::size_t>(rng.below(n))] = 1;
    if (pos == n) labels[static_cast<std::size_t>(rng.below(n))] = 0;
    pos = 0;
    for (std::uint8_t l : labels) pos += l;

    const double ap = dr::average_precision(scores, labels);
    const double loss = dr::ap_loss(dr::RankVector::ideal(pos, n - pos),
                                    dr::rank_from_scores(scores, labels));
    if (ap != 1.0 - loss) ++mismatches;
  }

  Outcome o;
  o.pass = mismatches == 0;
  o.detail = "1000 cases, " + std::to_string(mismatches) + " mismatches";
  return o;
}

// ---------------------------------------------------------------------------
// 10. Identical command lines produce byte-identical files.

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  if (!is) return "<unreadable:" + p.string() + ">";
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

bool run_cmd(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

Outcome check_cli_determinism() {
  const auto start = std::chrono::steady_clock::now();
  const fs::path dir =
      fs::temp_directory_path() / ("directrank_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto at = [&](const char* name) { return (dir / name).string(); };

  std::vector<std::string> diffs;
  auto expect_same = [&](const char* what, const fs::path& a, const fs::path& b) {
    if (slurp(a) != slurp(b)) diffs.emplace_back(what);
  };

  Outcome o;
  const std::string gen1 =
      "gen --kind teacher --n 600 --dim 6 --pos-frac 0.25 --seed 5 --split 0.5 "
      "--out " + at("tr1.csv") + " --out-test " + at("te1.csv");
  const std::string gen2 =
      "gen --kind teacher --n 600 --dim 6 --pos-frac 0.25 --seed 5 --split 0.5 "
      "--out " + at("tr2.csv") + " --out-test " + at("te2.csv");
  if (!run_cmd(gen1) || !run_cmd(gen2)) {
    o.detail = "teacher generation failed";
    return o;
  }
  expect_same("teacher train csv", at("tr1.csv"), at("tr2.csv"));
  expect_same("teacher test csv", at("te1.csv"), at("te2.csv"));

  if (!run_cmd("gen --kind norm --n 500 --dim 10 --seed 12 --out " + at("n1.csv")) ||
      !run_cmd("gen --kind norm --n 500 --dim 10 --seed 12 --out " + at("n2.csv"))) {
    o.detail = "norm generation failed";
    return o;
  }
  expect_same("norm csv", at("n1.csv"), at("n2.csv"));

  const std::string train_base =
      "train --method pos-ap --train " + at("tr1.csv") + " --test " +
      at("te1.csv") + " --iters 25 --lr 0.1 --epsilon 0.1 --hidden-dims 8,8 "
      "--seed 3 ";
  if (!run_cmd(train_base + "--log " + at("log1.csv") + " --ckpt " + at("ck1.txt")) ||
      !run_cmd(train_base + "--log " + at("log2.csv") + " --ckpt " + at("ck2.txt"))) {
    o.detail = "training run failed";
    return o;
  }
  expect_same("run log csv", at("log1.csv"), at("log2.csv"));
  expect_same("checkpoint", at("ck1.txt"), at("ck2.txt"));

  const std::string sweep_base =
      "sweep --methods pos-ap,hinge-ap --flips 0,0.2 --repeats 1 --train " +
      at("tr1.csv") + " --test " + at("te1.csv") +
      " --iters 10 --lr 0.1 --epsilon 0.1 --hidden-dims 6 --seed 17 --out ";
  if (!run_cmd(sweep_base + at("s1.csv")) || !run_cmd(sweep_base + at("s2.csv"))) {
    o.detail = "sweep run failed";
    return o;
  }
  expect_same("sweep csv", at("s1.csv"), at("s2.csv"));

  const double elapsed = seconds_since(start);
  o.pass = diffs.empty();
  if (diffs.empty()) {
    o.detail = "4 command pairs byte-identical, " + fmt("%.0f", elapsed) + "s";
  } else {
    o.detail = "differs:";
    for (const std::string& d : diffs) o.detail += " " + d;
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <cli-binary> [criterion-number]\n", argv[0]);
    return 2;
  }
  g_cli = argv[1];
  const int only = argc > 2 ? std::atoi(argv[2]) : 0;

  struct Entry {
    int id;
    const char* label;
    Outcome (*fn)();
  };
  const std::array<Entry, 10> entries = {{
      {1, "inference matches interleaving enumeration", check_dp_against_enumeration},
      {2, "interleavings attain the all-orderings optimum", check_full_permutation_bound},
      {3, "backtracked prefixes attain their table values", check_prefix_attainment},
      {4, "step gradient matches the ramp slope", check_ramp_gradient},
      {5, "backprop matches central differences", check_backprop_finite_difference},
      {6, "large-instance inference speed", check_inference_speed},
      {7, "clean-data ranking quality ordering", check_clean_data_ranking},
      {8, "label-noise robustness margin", check_noise_robustness},
      {9, "metric complements the ranking loss exactly", check_metric_identity},
      {10, "byte-identical command reruns", check_cli_determinism},
  }};

  bool all_pass = true;
  for (const Entry& e : entries) {
    if (only != 0 && e.id != only) continue;
    const Outcome o = e.fn();
    std::printf("criterion %2d %s  %s (%s)\n", e.id, o.pass ? "PASS" : "FAIL",
                e.label, o.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
