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

#include "asmdf/complexity.h"

#include <chrono>
#include <cmath>
#include <random>
#include <string>

#include "asmdf/errors.h"
#include "asmdf/signal.h"

namespace asmdf {
namespace {

// Keeps the timed loop from being optimized away.
volatile double g_sink = 0.0;

}  // namespace

SweepCost MeasureSweep(std::size_t n, Measure measure, int reps) {
  if (reps < 1) throw DomainError("repetitions must be at least 1");
  const std::size_t k_max = MaxLagFor(n);
  if (k_max < 1) {
    throw DomainError("window of " + std::to_string(n) +
                      " samples admits no lag");
  }
  std::mt19937_64 rng(0x5eed + n);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> samples(n);
  for (double& v : samples) v = gauss(rng);
  const Frame frame(samples);
  const LagRange range{1, k_max};

  SweepCost cost;
  cost.n = n;
  cost.measure = measure;
  {
    OpCounter ops;
    ComputeLagCurve(frame, range, measure, &ops);
    cost.ops = ops.count;
  }
  double sink = 0.0;
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) {
    const LagCurve curve = ComputeLagCurve(frame, range, measure);
    sink += curve.values().back();
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  cost.seconds = elapsed.count() / reps;
  g_sink = sink;
  return cost;
}

std::vector<SweepCost> RunComplexityBench(std::span<const std::size_t> sizes,
                                          int reps) {
  std::vector<SweepCost> rows;
  rows.reserve(sizes.size() * std::size(kAllMeasures));
  for (std::size_t n : sizes) {
    for (Measure m : kAllMeasures) rows.push_back(MeasureSweep(n, m, reps));
  }
  return rows;
}

double LogLogSlope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("slope fit needs at least two (x, y) points");
  }
  const double count = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0 && y[i] > 0.0)) {
      throw DomainError("log-log fit needs positive coordinates");
    }
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= count;
  my /= count;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw DomainError("log-log fit needs distinct x values");
  return sxy / sxx;
}

double OpsSlope(std::span<const SweepCost> rows, Measure measure) {
  std::vector<double> x, y;
  for (const SweepCost& row : rows) {
    if (row.measure != measure) continue;
    x.push_back(static_cast<double>(row.n));
    y.push_back(static_cast<double>(row.ops));
  }
  return LogLogSlope(x, y);
}

}  // namespace asmdf
