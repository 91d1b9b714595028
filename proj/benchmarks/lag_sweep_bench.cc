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

// Full lag sweeps k = 1 .. MaxLagFor(n) per measure, with a fitted
// complexity exponent. Expect O(N^2) for all three.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "asmdf/measures.h"
#include "asmdf/signal.h"

namespace {

std::vector<double> Noise(std::size_t n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = g(rng);
  return v;
}

void Sweep(benchmark::State& state, asmdf::Measure measure) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<double> y = Noise(n);
  const asmdf::Frame frame(y);
  const asmdf::LagRange range{1, asmdf::MaxLagFor(n)};
  for (auto _ : state) {
    const asmdf::LagCurve curve = asmdf::ComputeLagCurve(frame, range, measure);
    benchmark::DoNotOptimize(curve.values().data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_Asmdf(benchmark::State& s) { Sweep(s, asmdf::Measure::kAsmdf); }
void BM_Amdf(benchmark::State& s) { Sweep(s, asmdf::Measure::kAmdf); }
void BM_Autocorr(benchmark::State& s) {
  Sweep(s, asmdf::Measure::kAutocorrelation);
}

BENCHMARK(BM_Asmdf)->RangeMultiplier(2)->Range(256, 4096)->Complexity();
BENCHMARK(BM_Amdf)->RangeMultiplier(2)->Range(256, 4096)->Complexity();
BENCHMARK(BM_Autocorr)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
