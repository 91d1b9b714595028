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

#include "asmdf/synth.h"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "asmdf/errors.h"

namespace asmdf {

void SynthSpec::Validate() const {
  if (!(sample_rate_hz > 0.0) || !std::isfinite(sample_rate_hz)) {
    throw DomainError("sample rate must be positive");
  }
  if (length < 2) throw DomainError("signal length must be at least 2");
  if (!(noise.stddev >= 0.0)) {
    throw DomainError("noise standard deviation must be non-negative");
  }
  for (const SynthComponent& c : components) {
    if (!(c.frequency_hz >= 0.0) || c.frequency_hz >= sample_rate_hz / 2.0) {
      throw DomainError("component at " + std::to_string(c.frequency_hz) +
                        " Hz is outside [0, Nyquist = " +
                        std::to_string(sample_rate_hz / 2.0) + ") Hz");
    }
  }
}

Signal Synth(const SynthSpec& spec) {
  spec.Validate();
  std::vector<double> y(spec.length, 0.0);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (const SynthComponent& c : spec.components) {
    for (std::size_t n = 0; n < spec.length; ++n) {
      // fmod is exact, so whole cycles are removed without rounding.
      const double cycles =
          std::fmod(c.frequency_hz * static_cast<double>(n),
                    spec.sample_rate_hz) /
          spec.sample_rate_hz;
      const double arg = kTwoPi * cycles + c.phase_rad;
      y[n] += c.amplitude * (c.shape == SynthComponent::Shape::kSin
                                 ? std::sin(arg)
                                 : std::cos(arg));
    }
  }
  if (spec.noise.stddev > 0.0) {
    std::mt19937_64 rng(spec.noise.seed);
    std::normal_distribution<double> gauss(0.0, spec.noise.stddev);
    for (double& v : y) v += gauss(rng);
  }
  return Signal(std::move(y), spec.sample_rate_hz);
}

SynthSpec Experiment1Spec() {
  SynthSpec spec;
  spec.sample_rate_hz = 11000.0;
  spec.length = 11001;
  spec.components = {{1.0, 200.0, 0.0, SynthComponent::Shape::kSin}};
  return spec;
}

SynthSpec Experiment2Spec() {
  SynthSpec spec;
  spec.sample_rate_hz = 5500.0;
  spec.length = 5501;
  // 2*pi*n/55 -> 100 Hz; 5*pi*n/56 = 2*pi*n*(5/112) -> 5500*5/112 Hz.
  spec.components = {
      {0.47, 100.0, 0.0, SynthComponent::Shape::kSin},
      {0.59, 5500.0 * 5.0 / 112.0, 0.0, SynthComponent::Shape::kCos},
  };
  return spec;
}

}  // namespace asmdf
