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

#include "directrank/mlp.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "directrank/errors.hpp"
#include "directrank/text.hpp"

namespace directrank {

namespace {

void validate_dims(const std::vector<int>& dims) {
  if (dims.size() < 2) throw InvalidConfig("need at least input and output dims");
  for (int d : dims)
    if (d < 1) throw InvalidConfig("layer dims must be positive");
  if (dims.back() != 1) throw InvalidConfig("output dim must be 1");
}

}  // namespace

std::size_t MlpParams::num_params() const {
  std::size_t n = 0;
  for (int l = 0; l < num_layers(); ++l)
    n += static_cast<std::size_t>(dims[l]) * dims[l + 1] + dims[l + 1];
  return n;
}

MlpGrad MlpGrad::zeros_like(const MlpParams& p) {
  MlpGrad g;
  for (int l = 0; l < p.num_layers(); ++l) {
    g.weights.emplace_back(p.dims[l + 1], p.dims[l]);
    g.biases.emplace_back(static_cast<std::size_t>(p.dims[l + 1]), 0.0);
  }
  return g;
}

void MlpGrad::clear() {
  for (Matrix& w : weights) std::fill(w.data.begin(), w.data.end(), 0.0);
  for (auto& b : biases) std::fill(b.begin(), b.end(), 0.0);
}

MlpParams mlp_init(const std::vector<int>& dims, Rng& rng) {
  validate_dims(dims);
  MlpParams p;
  p.dims = dims;
  for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
    const int rows = dims[l + 1];
    const int cols = dims[l];
    Matrix w(rows, cols);
    for (double& v : w.data) v = rng.normal();
    std::vector<double> b(static_cast<std::size_t>(rows));
    for (double& v : b) v = rng.normal();
    p.weights.push_back(std::move(w));
    p.biases.push_back(std::move(b));
  }
  return p;
}

MlpParams mlp_init(const std::vector<int>& dims, std::uint64_t seed) {
  Rng rng(seed);
  return mlp_init(dims, rng);
}

double mlp_forward(const MlpParams& p, std::span<const double> x,
                   ForwardCache& cache) {
  if (static_cast<int>(x.size()) != p.input_dim())
    throw InvalidInput("input width does not match network");
  const int layers = p.num_layers();
  cache.pre.resize(layers);
  cache.act.resize(layers + 1);
  cache.act[0].assign(x.begin(), x.end());
  for (int l = 0; l < layers; ++l) {
    const Matrix& w = p.weights[l];
    const std::vector<double>& in = cache.act[l];
    std::vector<double>& z = cache.pre[l];
    z.assign(static_cast<std::size_t>(w.rows), 0.0);
    for (int r = 0; r < w.rows; ++r) {
      double acc = p.biases[l][r];
      const std::span<const double> row = w.row(r);
      for (int c = 0; c < w.cols; ++c) acc += row[c] * in[c];
      z[r] = acc;
    }
    std::vector<double>& a = cache.act[l + 1];
    a = z;
    if (l + 1 < layers)
      for (double& v : a) v = v > 0.0 ? v : 0.0;
  }
  return cache.act[layers][0];
}

double mlp_forward(const MlpParams& p, std::span<const double> x) {
  ForwardCache cache;
  return mlp_forward(p, x, cache);
}

void mlp_backward_accum(const MlpParams& p, const ForwardCache& cache,
                        double out_grad, MlpGrad& grad, BackpropScratch& scratch) {
  const int layers = p.num_layers();
  scratch.delta.assign(1, out_grad);
  for (int l = layers - 1; l >= 0; --l) {
    const Matrix& w = p.weights[l];
    const std::vector<double>& in = cache.act[l];
    Matrix& gw = grad.weights[l];
    std::vector<double>& gb = grad.biases[l];
    for (int r = 0; r < w.rows; ++r) {
      const double d = scratch.delta[r];
      if (d == 0.0) continue;
      gb[r] += d;
      const std::span<double> grow = gw.row(r);
      for (int c = 0; c < w.cols; ++c) grow[c] += d * in[c];
    }
    if (l == 0) break;
    scratch.delta_prev.assign(static_cast<std::size_t>(w.cols), 0.0);
    for (int r = 0; r < w.rows; ++r) {
      const double d = scratch.delta[r];
      if (d == 0.0) continue;
      const std::span<const double> wrow = w.row(r);
      for (int c = 0; c < w.cols; ++c) scratch.delta_prev[c] += wrow[c] * d;
    }
    const std::vector<double>& z = cache.pre[l - 1];
    for (int c = 0; c < w.cols; ++c)
      if (!(z[c] > 0.0)) scratch.delta_prev[c] = 0.0;
    std::swap(scratch.delta, scratch.delta_prev);
  }
}

MlpGrad grad_with_coeffs(const MlpParams& p, const Matrix& features,
                         std::span<const int> rows, std::span<const double> coeffs) {
  if (rows.size() != coeffs.size())
    throw InvalidInput("rows and coeffs differ in length");
  if (features.cols != p.input_dim())
    throw InvalidInput("feature width does not match network");
  MlpGrad grad = MlpGrad::zeros_like(p);
  ForwardCache cache;
  BackpropScratch scratch;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (coeffs[k] == 0.0) continue;
    if (rows[k] < 0 || rows[k] >= features.rows)
      throw InvalidInput("feature row out of range");
    mlp_forward(p, features.row(rows[k]), cache);
    mlp_backward_accum(p, cache, coeffs[k], grad, scratch);
  }
  return grad;
}

std::vector<double> score_all(const MlpParams& p, const Matrix& features) {
  if (features.cols != p.input_dim())
    throw InvalidInput("feature width does not match network");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(features.rows));
  ForwardCache cache;
  for (int r = 0; r < features.rows; ++r)
    out.push_back(mlp_forward(p, features.row(r), cache));
  return out;
}

void add_l2(MlpGrad& grad, const MlpParams& p, double l2_weight) {
  if (l2_weight == 0.0) return;
  const double s = 2.0 * l2_weight;
  for (int l = 0; l < p.num_layers(); ++l) {
    const std::vector<double>& w = p.weights[l].data;
    std::vector<double>& gw = grad.weights[l].data;
    for (std::size_t i = 0; i < w.size(); ++i) gw[i] += s * w[i];
    for (std::size_t i = 0; i < p.biases[l].size(); ++i)
      grad.biases[l][i] += s * p.biases[l][i];
  }
}

void apply_step(MlpParams& p, const MlpGrad& grad, double learning_rate) {
  for (int l = 0; l < p.num_layers(); ++l) {
    std::vector<double>& w = p.weights[l].data;
    const std::vector<double>& gw = grad.weights[l].data;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= learning_rate * gw[i];
    for (std::size_t i = 0; i < p.biases[l].size(); ++i)
      p.biases[l][i] -= learning_rate * grad.biases[l][i];
  }
}

void write_params(std::ostream& os, const MlpParams& p) {
  os << "directrank-mlp v1\n";
  os << "dims " << p.dims.size();
  for (int d : p.dims) os << ' ' << d;
  os << '\n';
  for (int l = 0; l < p.num_layers(); ++l) {
    os << "layer " << l << '\n';
    const Matrix& w = p.weights[l];
    for (int r = 0; r < w.rows; ++r) {
      const std::span<const double> row = w.row(r);
      for (int c = 0; c < w.cols; ++c) {
        if (c) os << ' ';
        os << format_double(row[c]);
      }
      os << '\n';
    }
    for (std::size_t i = 0; i < p.biases[l].size(); ++i) {
      if (i) os << ' ';
      os << format_double(p.biases[l][i]);
    }
    os << '\n';
  }
  os << "end\n";
}

namespace {

std::string next_line(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw IoError("checkpoint truncated");
  return line;
}

std::vector<double> parse_number_line(std::istream& is, std::size_t expect) {
  const std::string line = next_line(is);
  const std::vector<std::string_view> parts = split(line, ' ');
  if (parts.size() != expect) throw IoError("checkpoint row has wrong width");
  std::vector<double> out;
  out.reserve(expect);
  for (std::string_view p : parts) out.push_back(parse_double(p));
  return out;
}

}  // namespace

MlpParams read_params(std::istream& is) {
  try {
    if (next_line(is) != "directrank-mlp v1")
      throw IoError("not a directrank checkpoint");
    const std::string dims_line = next_line(is);
    const std::vector<std::string_view> dim_parts = split(dims_line, ' ');
    if (dim_parts.size() < 2 || dim_parts[0] != "dims")
      throw IoError("missing dims header");
    const long long k = parse_int(dim_parts[1]);
    if (k < 2 || k > 1000 || dim_parts.size() != static_cast<std::size_t>(k) + 2)
      throw IoError("bad dims header");
    std::vector<int> dims;
    for (long long i = 0; i < k; ++i) {
      const long long d = parse_int(dim_parts[i + 2]);
      if (d < 1 || d > 1000000) throw IoError("bad layer dim");
      dims.push_back(static_cast<int>(d));
    }
    validate_dims(dims);

    MlpParams p;
    p.dims = dims;
    for (int l = 0; l + 1 < k; ++l) {
      std::ostringstream expect;
      expect << "layer " << l;
      if (next_line(is) != expect.str()) throw IoError("missing layer header");
      Matrix w(dims[l + 1], dims[l]);
      for (int r = 0; r < w.rows; ++r) {
        const std::vector<double> row = parse_number_line(is, dims[l]);
        std::copy(row.begin(), row.end(), w.row(r).begin());
      }
      p.weights.push_back(std::move(w));
      p.biases.push_back(parse_number_line(is, dims[l + 1]));
    }
    if (next_line(is) != "end") throw IoError("missing end marker");
    return p;
  } catch (const InvalidInput& e) {
    throw IoError(std::string("bad checkpoint number: ") + e.what());
  }
}

void save_checkpoint(const MlpParams& p, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open for writing: " + path);
  write_params(os, p);
  if (!os) throw IoError("write failed: " + path);
}

MlpParams load_checkpoint(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open for reading: " + path);
  return read_params(is);
}

}  // namespace directrank
