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

// Synthetic test signals: a sum of real sinusoids plus white Gaussian noise,
//
//   y[n] = sum_j a_j * trig_j(2*pi*f_j*n/fs + phi_j) + sigma * z[n],
//
// with z[n] i.i.d. N(0,1) drawn from a seeded mt19937_64.

#ifndef ASMDF_SYNTH_H_
#define ASMDF_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "asmdf/signal.h"

namespace asmdf {

struct SynthComponent {
  enum class Shape { kSin, kCos };

  double amplitude = 1.0;
  double frequency_hz = 0.0;
  double phase_rad = 0.0;
  Shape shape = Shape::kSin;
};

struct SynthNoise {
  double stddev = 0.0;
  std::uint64_t seed = 0;
};

struct SynthSpec {
  std::vector<SynthComponent> components;
  SynthNoise noise;
  double sample_rate_hz = 11000.0;
  std::size_t length = 11001;

  // DomainError if a component is at or above Nyquist, the rate is not
  // positive, the noise std is negative, or length < 2.
  void Validate() const;
};

// Deterministic for a given spec. When f_j * n is an exact integer (integer
// frequencies), the phase is reduced exactly, so a component whose period is
// an integer P samples satisfies y[n] == y[n + P] bit for bit.
Signal Synth(const SynthSpec& spec);

// sin(2*pi*n/55) at 11000 Hz, n = 0..11000 (200 Hz, period 55 samples).
SynthSpec Experiment1Spec();
// 0.47*sin(2*pi*n/55) + 0.59*cos(5*pi*n/56) at 5500 Hz, n = 0..5500.
SynthSpec Experiment2Spec();

}  // namespace asmdf

#endif  // ASMDF_SYNTH_H_
