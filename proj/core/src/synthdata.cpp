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

#include "directrank/synthdata.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <string>

#include "directrank/errors.hpp"
#include "directrank/mlp.hpp"
#include "directrank/rng.hpp"
#include "directrank/text.hpp"

namespace directrank {

int Dataset::num_pos() const {
  int c = 0;
  for (std::uint8_t l : labels) c += l;
  return c;
}

void Dataset::require_both_classes() const {
  if (num_pos() == 0 || num_pos() == size())
    throw InvalidConfig("dataset needs both classes");
}

namespace {

// ceil/floor of a fraction of n, robust to the product landing a few ulps
// off an intended integer.
int ceil_count(double frac, int n) {
  return static_cast<int>(std::ceil(frac * n - 1e-9));
}
int floor_count(double frac, int n) {
  return static_cast<int>(std::floor(frac * n + 1e-9));
}

}  // namespace

Dataset gen_teacher(int n, int dim, int hidden, double pos_frac,
                    std::uint64_t seed, MlpParams* teacher_out) {
  if (n < 10) throw InvalidConfig("need at least 10 samples");
  if (dim < 1 || hidden < 1) throw InvalidConfig("dims must be positive");
  if (!(pos_frac > 0.0 && pos_frac < 1.0))
    throw InvalidConfig("pos_frac must be inside (0,1)");

  Rng param_rng(derive_seed(seed, 0));
  const std::vector<int> dims = {dim, hidden, hidden, hidden, hidden, 1};
  const MlpParams teacher = mlp_init(dims, param_rng);
  if (teacher_out != nullptr) *teacher_out = teacher;

  Dataset ds;
  ds.features = Matrix(n, dim);
  Rng input_rng(derive_seed(seed, 1));
  for (double& v : ds.features.data) v = input_rng.normal();

  const std::vector<double> scores = score_all(teacher, ds.features);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });

  const int k = ceil_count(pos_frac, n);
  if (k <= 0 || k >= n) throw InvalidConfig("labeling leaves an empty class");

  ds.labels.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < k; ++i) ds.labels[order[i]] = 1;
  return ds;
}

Dataset gen_norm_threshold(int n, int dim, double sigma, double t_hi,
                           double t_lo, std::uint64_t seed) {
  if (n < 1) throw InvalidConfig("need at least one sample");
  if (dim < 1) throw InvalidConfig("dim must be positive");
  if (!(sigma > 0.0)) throw InvalidConfig("sigma must be positive");
  if (!(t_hi > t_lo && t_lo > 0.0))
    throw InvalidConfig("thresholds must satisfy t_hi > t_lo > 0");

  Dataset ds;
  ds.features = Matrix(n, dim);
  ds.labels.assign(static_cast<std::size_t>(n), 0);
  Rng rng(seed);
  std::vector<double> row(static_cast<std::size_t>(dim));
  int kept = 0;
  while (kept < n) {
    double sq = 0.0;
    for (double& v : row) {
      v = sigma * rng.normal();
      sq += v * v;
    }
    if (sq > t_hi)
      ds.labels[kept] = 1;
    else if (!(sq < t_lo))
      continue;
    std::copy(row.begin(), row.end(), ds.features.row(kept).begin());
    ++kept;
  }
  return ds;
}

Dataset flip_labels(const Dataset& ds, double fraction, std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0))
    throw InvalidConfig("flip fraction must be inside [0,1]");
  Dataset out = ds;
  const int k = floor_count(fraction, ds.size());
  Rng rng(seed);
  for (int i : sample_without_replacement(ds.size(), k, rng))
    out.labels[i] ^= 1;
  out.require_both_classes();
  return out;
}

std::pair<Dataset, Dataset> split(const Dataset& ds, double train_frac,
                                  std::uint64_t seed) {
  if (!(train_frac > 0.0 && train_frac < 1.0))
    throw InvalidConfig("train_frac must be inside (0,1)");
  const int n = ds.size();
  const int k = floor_count(train_frac, n);
  if (k < 1 || k > n - 1) throw InvalidConfig("split leaves an empty side");

  Rng rng(seed);
  const std::vector<int> train_idx = sample_without_replacement(n, k, rng);
  std::vector<std::uint8_t> in_train(static_cast<std::size_t>(n), 0);
  for (int i : train_idx) in_train[i] = 1;

  auto take = [&](bool want_train) {
    Dataset part;
    const int rows = want_train ? k : n - k;
    part.features = Matrix(rows, ds.dim());
    part.labels.reserve(static_cast<std::size_t>(rows));
    int r = 0;
    for (int i = 0; i < n; ++i) {
      if ((in_train[i] != 0) != want_train) continue;
      std::copy(ds.features.row(i).begin(), ds.features.row(i).end(),
                part.features.row(r).begin());
      part.labels.push_back(ds.labels[i]);
      ++r;
    }
    return part;
  };
  std::pair<Dataset, Dataset> parts{take(true), take(false)};
  parts.first.require_both_classes();
  parts.second.require_both_classes();
  return parts;
}

void write_csv(std::ostream& os, const Dataset& ds) {
  os << "label";
  for (int c = 0; c < ds.dim(); ++c) os << ",f" << c;
  os << '\n';
  for (int r = 0; r < ds.size(); ++r) {
    os << static_cast<int>(ds.labels[r]);
    for (const double v : ds.features.row(r)) os << ',' << format_double(v);
    os << '\n';
  }
}

void write_csv_file(const std::string& path, const Dataset& ds) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open for writing: " + path);
  write_csv(os, ds);
  if (!os) throw IoError("write failed: " + path);
}

Dataset read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw IoError("empty dataset file");
  const std::vector<std::string_view> head = split(line, ',');
  if (head.size() < 2 || head[0] != "label")
    throw IoError("bad dataset header");
  const int dim = static_cast<int>(head.size()) - 1;
  for (int c = 0; c < dim; ++c)
    if (head[c + 1] != "f" + std::to_string(c))
      throw IoError("bad dataset header");

  std::vector<std::uint8_t> labels;
  std::vector<double> values;
  try {
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      const std::vector<std::string_view> parts = split(line, ',');
      if (parts.size() != static_cast<std::size_t>(dim) + 1)
        throw IoError("dataset row has wrong width");
      const long long label = parse_int(parts[0]);
      if (label != 0 && label != 1) throw IoError("labels must be 0 or 1");
      labels.push_back(static_cast<std::uint8_t>(label));
      for (int c = 0; c < dim; ++c) {
        const double v = parse_double(parts[c + 1]);
        if (!std::isfinite(v)) throw IoError("non-finite feature");
        values.push_back(v);
      }
    }
  } catch (const InvalidInput& e) {
    throw IoError(std::string("bad dataset number: ") + e.what());
  }
  if (labels.empty()) throw IoError("dataset has no rows");

  Dataset ds;
  ds.features = Matrix(static_cast<int>(labels.size()), dim);
  ds.features.data = std::move(values);
  ds.labels = std::move(labels);
  return ds;
}

Dataset read_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open for reading: " + path);
  return read_csv(is);
}

}  // namespace directrank
