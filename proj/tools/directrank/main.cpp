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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "directrank/certify.hpp"
#include "directrank/errors.hpp"
#include "directrank/metrics.hpp"
#include "directrank/mlp.hpp"
#include "directrank/rng.hpp"
#include "directrank/synthdata.hpp"
#include "directrank/text.hpp"
#include "directrank/trainers.hpp"

namespace dr = directrank;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitOracle = 3;

// Flag inconsistencies found after CLI parsing; exits with kExitUsage.
struct UsageError {
  std::string message;
};

struct GenArgs {
  std::string kind;
  int n = 0;
  int dim = 0;
  std::uint64_t seed = 0;
  double pos_frac = 0.2;
  int hidden = 32;
  double flip = 0.0;
  bool has_flip = false;
  double split_frac = 0.0;
  bool has_split = false;
  std::string out;
  std::string out_test;
};

struct TrainArgs {
  std::string method;
  std::string train_path;
  std::string test_path;
  int iters = 300;
  double lr = 0.1;
  double epsilon = 0.0;
  bool has_epsilon = false;
  double l2 = 0.0;
  std::string batch = "all";
  std::string hidden_dims = "32,32,32,32";
  std::uint64_t seed = 0;
  std::string log_path;
  std::string ckpt_path;
};

struct EvalArgs {
  std::string data_path;
  std::string ckpt_path;
};

struct OracleArgs {
  int max_p = 6;
  int max_n = 6;
  int trials = 50;
  std::uint64_t seed = 7;
  bool full_perm = false;
};

struct SweepArgs {
  std::string methods;
  std::string flips;
  int repeats = 1;
  std::string flip_side = "train";
  std::string out;
  TrainArgs train;
};

std::vector<int> parse_hidden_dims(const std::string& text) {
  std::vector<int> dims;
  try {
    for (std::string_view token : dr::split(text, ',')) {
      const long long v = dr::parse_int(token);
      if (v < 1 || v > 100000) throw UsageError{"bad hidden dim: " + text};
      dims.push_back(static_cast<int>(v));
    }
  } catch (const dr::InvalidInput&) {
    throw UsageError{"bad --hidden-dims value: " + text};
  }
  if (dims.empty()) throw UsageError{"empty --hidden-dims"};
  return dims;
}

int parse_batch(const std::string& text) {
  if (text == "all") return 0;
  try {
    const long long v = dr::parse_int(text);
    if (v >= 1) return static_cast<int>(v);
  } catch (const dr::InvalidInput&) {
  }
  throw UsageError{"--batch must be a positive count or all: " + text};
}

dr::TrainConfig make_train_config(const TrainArgs& a, dr::Method method) {
  if (dr::is_direct_method(method) && !a.has_epsilon)
    throw UsageError{"--epsilon is required for method " +
                     std::string(dr::method_name(method))};
  dr::TrainConfig cfg;
  cfg.method = method;
  if (a.has_epsilon) cfg.epsilon = a.epsilon;
  cfg.learning_rate = a.lr;
  cfg.l2_weight = a.l2;
  cfg.iterations = a.iters;
  cfg.batch_size = parse_batch(a.batch);
  cfg.seed = a.seed;
  return cfg;
}

std::vector<int> network_dims(int input_dim, const std::vector<int>& hidden) {
  std::vector<int> dims;
  dims.push_back(input_dim);
  dims.insert(dims.end(), hidden.begin(), hidden.end());
  dims.push_back(1);
  return dims;
}

int run_gen(const GenArgs& a) {
  dr::Dataset ds;
  if (a.kind == "teacher") {
    ds = dr::gen_teacher(a.n, a.dim, a.hidden, a.pos_frac, a.seed);
  } else {
    ds = dr::gen_norm_threshold(a.n, a.dim, 10.0, 1200.0, 1000.0, a.seed);
  }
  if (a.has_flip && a.flip > 0.0)
    ds = dr::flip_labels(ds, a.flip, dr::derive_seed(a.seed, 2));
  if (a.has_split != !a.out_test.empty())
    throw UsageError{"--split and --out-test must be given together"};
  std::cout << "n=" << ds.size() << " pos=" << ds.num_pos()
            << " neg=" << ds.num_neg() << "\n";
  if (a.has_split) {
    const auto [train, test] = dr::split(ds, a.split_frac, dr::derive_seed(a.seed, 3));
    dr::write_csv_file(a.out, train);
    dr::write_csv_file(a.out_test, test);
    std::cout << "train: n=" << train.size() << " pos=" << train.num_pos()
              << " neg=" << train.num_neg() << "\n";
    std::cout << "test: n=" << test.size() << " pos=" << test.num_pos()
              << " neg=" << test.num_neg() << "\n";
  } else {
    dr::write_csv_file(a.out, ds);
  }
  return kExitOk;
}

int run_train(const TrainArgs& a) {
  const dr::Method method = dr::parse_method(a.method);
  dr::TrainConfig cfg = make_train_config(a, method);
  const std::vector<int> hidden = parse_hidden_dims(a.hidden_dims);

  const dr::Dataset train = dr::read_csv_file(a.train_path);
  const dr::Dataset test = dr::read_csv_file(a.test_path);

  dr::MlpParams params = dr::mlp_init(network_dims(train.dim(), hidden),
                                      dr::derive_seed(a.seed, 0));
  cfg.eval_every = (cfg.iterations + 9) / 10;
  const dr::RunLog log = dr::run_training(train, test, params, cfg);

  std::ofstream os(a.log_path);
  if (!os) throw dr::IoError("cannot open for writing: " + a.log_path);
  log.write_csv(os);
  if (!os) throw dr::IoError("write failed: " + a.log_path);
  if (!a.ckpt_path.empty()) dr::save_checkpoint(params, a.ckpt_path);

  if (log.skipped_steps > 0)
    std::cerr << "warning: " << log.skipped_steps
              << " single-class batches skipped\n";
  std::cout << "final train_ap=" << dr::format_double(log.final_row().train_ap)
            << " test_ap=" << dr::format_double(log.final_row().test_ap)
            << "\n";
  return kExitOk;
}

int run_eval(const EvalArgs& a) {
  const dr::Dataset ds = dr::read_csv_file(a.data_path);
  const dr::MlpParams params = dr::load_checkpoint(a.ckpt_path);
  const std::vector<double> scores = dr::score_all(params, ds.features);
  std::cout << "ap=" << dr::format_double(dr::average_precision(scores, ds.labels))
            << " err01=" << dr::format_double(dr::zero_one_error(scores, ds.labels))
            << "\n";
  return kExitOk;
}

int run_oracle_check(const OracleArgs& a) {
  dr::OracleCheckOptions opts;
  opts.max_p = a.max_p;
  opts.max_n = a.max_n;
  opts.trials = a.trials;
  opts.seed = a.seed;
  opts.full_perm = a.full_perm;
  const dr::OracleCheckReport report = dr::run_oracle_check(opts);
  std::cout << "checks=" << report.checks << " failures=" << report.failures
            << " max_deviation=" << dr::format_double(report.max_deviation)
            << "\n";
  if (!report.passed()) {
    std::cerr << "mismatch: " << report.first_failure << "\n";
    return kExitOracle;
  }
  return kExitOk;
}

int run_sweep(const SweepArgs& a) {
  std::vector<dr::Method> methods;
  try {
    for (std::string_view name : dr::split(a.methods, ','))
      methods.push_back(dr::parse_method(name));
  } catch (const dr::InvalidConfig& e) {
    throw UsageError{e.what()};
  }
  std::vector<double> flips;
  try {
    for (std::string_view token : dr::split(a.flips, ',')) {
      const double f = dr::parse_double(token);
      if (f < 0.0 || f > 1.0)
        throw UsageError{"flip fractions must be in [0,1]"};
      flips.push_back(f);
    }
  } catch (const dr::InvalidInput&) {
    throw UsageError{"bad --flips value: " + a.flips};
  }
  if (methods.empty() || flips.empty() || a.repeats < 1)
    throw UsageError{"sweep needs methods, flips, and positive repeats"};
  for (const dr::Method m : methods)
    (void)make_train_config(a.train, m);
  const std::vector<int> hidden = parse_hidden_dims(a.train.hidden_dims);

  const dr::Dataset train = dr::read_csv_file(a.train.train_path);
  const dr::Dataset test = dr::read_csv_file(a.train.test_path);
  const std::vector<int> dims = network_dims(train.dim(), hidden);

  std::ofstream os(a.out);
  if (!os) throw dr::IoError("cannot open for writing: " + a.out);
  os << "method,flip,seed,final_test_ap\n";

  int cells = 0;
  int failed = 0;
  for (const dr::Method method : methods) {
    for (std::size_t fi = 0; fi < flips.size(); ++fi) {
      for (int r = 0; r < a.repeats; ++r) {
        const std::uint64_t cell_seed =
            a.train.seed + static_cast<std::uint64_t>(r);
        ++cells;
        try {
          dr::Dataset cell_train = train;
          dr::Dataset cell_test = test;
          if (flips[fi] > 0.0) {
            const std::uint64_t flip_seed = dr::derive_seed(cell_seed, 100 + fi);
            if (a.flip_side == "train")
              cell_train = dr::flip_labels(train, flips[fi], flip_seed);
            else
              cell_test = dr::flip_labels(test, flips[fi], flip_seed);
          }
          dr::TrainConfig cfg = make_train_config(a.train, method);
          cfg.seed = cell_seed;
          dr::MlpParams params =
              dr::mlp_init(dims, dr::derive_seed(cell_seed, 0));
          const dr::RunLog log =
              dr::run_training(cell_train, cell_test, params, cfg);
          os << dr::method_name(method) << ',' << dr::format_double(flips[fi])
             << ',' << cell_seed << ','
             << dr::format_double(log.final_row().test_ap) << '\n';
        } catch (const std::exception& e) {
          ++failed;
          std::cerr << "cell method=" << dr::method_name(method)
                    << " flip=" << dr::format_double(flips[fi])
                    << " seed=" << cell_seed << " failed: " << e.what() << "\n";
        }
      }
    }
  }
  if (!os) throw dr::IoError("write failed: " + a.out);
  os.close();
  std::cout << "cells=" << cells << " failed=" << failed << "\n";
  return failed > 0 ? kExitData : kExitOk;
}

void add_shared_train_flags(CLI::App* cmd, TrainArgs& t, CLI::Option*& eps_opt) {
  cmd->add_option("--train", t.train_path, "training CSV")->required();
  cmd->add_option("--test", t.test_path, "test CSV")->required();
  cmd->add_option("--iters", t.iters, "iteration count")->required();
  cmd->add_option("--lr", t.lr, "learning rate")->required();
  eps_opt = cmd->add_option("--epsilon", t.epsilon, "direct-loss epsilon");
  cmd->add_option("--l2", t.l2, "L2 regularization weight");
  cmd->add_option("--batch", t.batch, "batch size or all");
  cmd->add_option("--hidden-dims", t.hidden_dims, "CSV hidden widths");
  cmd->add_option("--seed", t.seed, "run seed")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"direct ranking-loss training toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a synthetic dataset");
  gen_cmd->add_option("--kind", gen.kind, "teacher|norm")
      ->required()
      ->check(CLI::IsMember({"teacher", "norm"}));
  gen_cmd->add_option("--n", gen.n, "sample count")->required();
  gen_cmd->add_option("--dim", gen.dim, "feature dimension")->required();
  gen_cmd->add_option("--seed", gen.seed, "generator seed")->required();
  gen_cmd->add_option("--pos-frac", gen.pos_frac, "positive fraction (teacher)");
  gen_cmd->add_option("--hidden", gen.hidden, "teacher hidden width");
  CLI::Option* flip_opt =
      gen_cmd->add_option("--flip", gen.flip, "label flip fraction");
  CLI::Option* split_opt =
      gen_cmd->add_option("--split", gen.split_frac, "train fraction");
  gen_cmd->add_option("--out", gen.out, "output CSV path")->required();
  gen_cmd->add_option("--out-test", gen.out_test,
                      "test CSV path (with --split)");

  TrainArgs train;
  CLI::Option* train_eps = nullptr;
  CLI::App* train_cmd = app.add_subcommand("train", "train a scoring network");
  train_cmd->add_option("--method", train.method, "training method")
      ->required()
      ->check(CLI::IsMember({"pos-ap", "neg-ap", "pos-01", "neg-01", "hinge-ap",
                             "hinge-01", "per-ap", "per-01", "xent"}));
  add_shared_train_flags(train_cmd, train, train_eps);
  train_cmd->add_option("--log", train.log_path, "run log CSV path")->required();
  train_cmd->add_option("--ckpt", train.ckpt_path, "checkpoint output path");

  EvalArgs eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a checkpoint");
  eval_cmd->add_option("--data", eval.data_path, "dataset CSV")->required();
  eval_cmd->add_option("--ckpt", eval.ckpt_path, "checkpoint path")->required();

  OracleArgs oracle;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle-check", "certify inference against enumeration");
  oracle_cmd->add_option("--max-p", oracle.max_p, "max positives");
  oracle_cmd->add_option("--max-n", oracle.max_n, "max negatives");
  oracle_cmd->add_option("--trials", oracle.trials, "instances per shape");
  oracle_cmd->add_option("--seed", oracle.seed, "instance seed");
  oracle_cmd->add_flag("--full-perm", oracle.full_perm,
                       "also check every sample ordering on small instances");

  SweepArgs sweep;
  CLI::Option* sweep_eps = nullptr;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "run a method x flip-fraction grid");
  sweep_cmd->add_option("--methods", sweep.methods, "CSV of methods")->required();
  sweep_cmd->add_option("--flips", sweep.flips, "CSV of flip fractions")
      ->required();
  sweep_cmd->add_option("--repeats", sweep.repeats, "repeats per cell")
      ->required();
  sweep_cmd
      ->add_option("--flip-side", sweep.flip_side, "apply flips to train|test")
      ->check(CLI::IsMember({"train", "test"}));
  add_shared_train_flags(sweep_cmd, sweep.train, sweep_eps);
  sweep_cmd->add_option("--out", sweep.out, "aggregated CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  gen.has_flip = flip_opt->count() > 0;
  gen.has_split = split_opt->count() > 0;
  train.has_epsilon = train_eps->count() > 0;
  sweep.train.has_epsilon = sweep_eps->count() > 0;

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*train_cmd) return run_train(train);
    if (*eval_cmd) return run_eval(eval);
    if (*oracle_cmd) return run_oracle_check(oracle);
    if (*sweep_cmd) return run_sweep(sweep);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
