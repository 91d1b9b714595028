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

#include "asmdf/tracker.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "asmdf/errors.h"

namespace asmdf {

LagRange ResolveLagRange(const TrackerConfig& config, double sample_rate_hz) {
  config.framing.Validate();
  const std::size_t limit = MaxLagFor(config.framing.window_size);

  if (const auto* explicit_range = std::get_if<LagRange>(&config.lag)) {
    LagRange range = LagRange::Make(explicit_range->k_min,
                                    explicit_range->k_max);
    range.CheckFits(config.framing.window_size);
    return range;
  }

  const PitchBand& band = std::get<PitchBand>(config.lag);
  if (!(band.f_min_hz > 0.0 && band.f_min_hz < band.f_max_hz &&
        band.f_max_hz < sample_rate_hz / 2.0)) {
    throw DomainError("pitch band [" + std::to_string(band.f_min_hz) + ", " +
                      std::to_string(band.f_max_hz) +
                      "] Hz must satisfy 0 < f_min < f_max < " +
                      std::to_string(sample_rate_hz / 2.0));
  }
  const auto k_lo = static_cast<std::size_t>(
      std::ceil(sample_rate_hz / band.f_max_hz));
  const auto k_hi = static_cast<std::size_t>(
      std::floor(sample_rate_hz / band.f_min_hz));
  const std::size_t k_min = std::max({config.min_lag, k_lo, std::size_t{1}});
  const std::size_t k_max = std::min(k_hi, limit);
  if (k_min > k_max) {
    throw DomainError("pitch band yields no admissible lag for a window of " +
                      std::to_string(config.framing.window_size) +
                      " samples at " + std::to_string(sample_rate_hz) + " Hz");
  }
  return LagRange{k_min, k_max};
}

std::size_t PitchContour::VoicedCount() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(),
                    [](const ContourEntry& e) { return e.voiced(); }));
}

PitchContour Track(const Signal& signal, const TrackerConfig& config) {
  config.picker.Validate();
  if (config.energy_gate < 0.0) {
    throw DomainError("energy gate must be non-negative");
  }
  const LagRange range = ResolveLagRange(config, signal.sample_rate_hz());
  const std::vector<Frame> frames = FrameIter(signal, config.framing);

  PitchContour contour;
  contour.source = config.measure;
  contour.config = config;
  contour.entries.reserve(frames.size());
  for (const Frame& frame : frames) {
    ContourEntry entry;
    entry.time_ms = frame.start_time_ms();
    const bool gated =
        config.energy_gate > 0.0 && frame.MeanSquare() < config.energy_gate;
    if (!gated && !frame.IsConstant()) {
      entry.pitch_hz =
          EstimatePitch(frame, range, config.measure, config.picker);
    }
    contour.entries.push_back(entry);
  }
  return contour;
}

const PitchContour& MethodContours::For(Measure measure) const {
  switch (measure) {
    case Measure::kAsmdf:
      return asmdf;
    case Measure::kAmdf:
      return amdf;
    case Measure::kAutocorrelation:
      return autocorr;
  }
  throw DomainError("unknown measure");
}

MethodContours TrackAllMethods(const Signal& signal,
                               const TrackerConfig& config) {
  MethodContours out;
  TrackerConfig per_method = config;
  per_method.measure = Measure::kAsmdf;
  out.asmdf = Track(signal, per_method);
  per_method.measure = Measure::kAmdf;
  out.amdf = Track(signal, per_method);
  per_method.measure = Measure::kAutocorrelation;
  out.autocorr = Track(signal, per_method);
  return out;
}

}  // namespace asmdf
