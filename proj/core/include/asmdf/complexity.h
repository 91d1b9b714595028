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

// Cost of a full lag sweep, k = 1 .. MaxLagFor(n), as a function of the
// window length n. Operation counts come from the measure kernels'
// OpCounter and are machine independent; wall time is reported alongside.

#ifndef ASMDF_COMPLEXITY_H_
#define ASMDF_COMPLEXITY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "asmdf/measures.h"

namespace asmdf {

struct SweepCost {
  std::size_t n = 0;
  Measure measure = Measure::kAsmdf;
  std::uint64_t ops = 0;
  double seconds = 0.0;  // mean over repetitions
};

// Sweeps one measure over a seeded white-noise window of n samples.
// Requires n >= 5 so that at least one lag is admissible.
SweepCost MeasureSweep(std::size_t n, Measure measure, int reps);

// One row per (size, measure), sizes in the given order, measures in
// kAllMeasures order.
std::vector<SweepCost> RunComplexityBench(std::span<const std::size_t> sizes,
                                          int reps);

// Least-squares slope of log(y) against log(x). Needs >= 2 points with
// positive coordinates and distinct x; DomainError otherwise.
double LogLogSlope(std::span<const double> x, std::span<const double> y);

// Slope of ops against n for one measure's rows of a bench run.
double OpsSlope(std::span<const SweepCost> rows, Measure measure);

}  // namespace asmdf

#endif  // ASMDF_COMPLEXITY_H_
