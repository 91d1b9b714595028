// Copyright 2026 The asmdf-pitch Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Naive reference implementations used only by tests. They work on plain
// vectors with 1-based index arithmetic written straight from the
// definitions and share no code with the library.

#ifndef ASMDF_TESTS_ORACLES_H_
#define ASMDF_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace asmdf::oracle {

inline std::vector<double> Vec(std::span<const double> s) {
  return {s.begin(), s.end()};
}

inline double Mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double SampleVariance(const std::vector<double>& v) {
  const double m = Mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return ss / static_cast<double>(v.size() - 1);
}

// y_{i,k} = { y_{i+pk} : p in Z, 1 <= i+pk <= n } for i = 1..n, then
// deduplicated: i and i+k name the same set, so only i = 1..k are kept.
inline std::vector<std::vector<double>> Classes(const std::vector<double>& y,
                                                std::size_t k) {
  const long n = static_cast<long>(y.size());
  std::vector<std::vector<double>> out;
  for (long i = 1; i <= static_cast<long>(k) && i <= n; ++i) {
    std::vector<double> cls;
    for (long idx = 1; idx <= n; ++idx) {
      if ((idx - i) % static_cast<long>(k) == 0) cls.push_back(y[idx - 1]);
    }
    out.push_back(cls);
  }
  return out;
}

// g(k) = (1/q_k) sum_{classes with >= 2 members} Var.
inline double AsmdfG(const std::vector<double>& y, std::size_t k) {
  double total = 0.0;
  int q = 0;
  for (const auto& cls : Classes(y, k)) {
    if (cls.size() < 2) continue;
    total += SampleVariance(cls);
    ++q;
  }
  return total / q;
}

// 1/(2|C_k|) * sum over ordered (i, j), i != j, k | |i - j|.
inline double PairSum(const std::vector<double>& y, std::size_t k) {
  const long n = static_cast<long>(y.size());
  double acc = 0.0;
  long count = 0;
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= n; ++j) {
      if (i == j || std::labs(i - j) % static_cast<long>(k) != 0) continue;
      const double d = y[i - 1] - y[j - 1];
      acc += d * d;
      ++count;
    }
  }
  return acc / (2.0 * static_cast<double>(count));
}

inline double Autocovariance(const std::vector<double>& y, std::size_t k) {
  const long n = static_cast<long>(y.size());
  const double m = Mean(y);
  double acc = 0.0;
  for (long i = 1; i <= n - static_cast<long>(k); ++i) {
    acc += (y[i - 1] - m) * (y[i - 1 + k] - m);
  }
  return acc / static_cast<double>(n - static_cast<long>(k));
}

inline double Amdf(const std::vector<double>& y, std::size_t k) {
  const long n = static_cast<long>(y.size());
  double acc = 0.0;
  for (long j = 1; j <= n - static_cast<long>(k); ++j) {
    acc += std::abs(y[j - 1 + k] - y[j - 1]);
  }
  return acc / static_cast<double>(n - static_cast<long>(k));
}

// Single-pass (raw moment) reference for the evaluation metrics.
struct NaiveReport {
  double mean_error;
  double sigma_e;
  double sigma_standard;
  double pearson;
};

inline NaiveReport Evaluate(const std::vector<double>& truth,
                            const std::vector<double>& est) {
  const double len = static_cast<double>(truth.size());
  double se = 0, se2 = 0, sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double e = (truth[i] - est[i]) / truth[i];
    se += e;
    se2 += e * e;
    sx += truth[i];
    sy += est[i];
    sxx += truth[i] * truth[i];
    syy += est[i] * est[i];
    sxy += truth[i] * est[i];
  }
  NaiveReport r{};
  r.mean_error = se / len;
  r.sigma_e = std::sqrt(std::max(0.0, se2 / (len - 1) - r.mean_error * r.mean_error));
  r.sigma_standard =
      std::sqrt(std::max(0.0, (se2 - len * r.mean_error * r.mean_error) / (len - 1)));
  const double cov = sxy - sx * sy / len;
  const double vx = sxx - sx * sx / len;
  const double vy = syy - sy * sy / len;
  r.pearson = cov / std::sqrt(vx * vy);
  return r;
}

inline std::vector<double> GaussianVector(std::size_t n, std::uint64_t seed,
                                          double stddev = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, stddev);
  std::vector<double> v(n);
  for (double& x : v) x = g(rng);
  return v;
}

inline std::vector<double> UniformVector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

}  // namespace asmdf::oracle

#endif  // ASMDF_TESTS_ORACLES_H_
