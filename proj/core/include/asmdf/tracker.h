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

// Frame-by-frame pitch tracking of a whole signal.

#ifndef ASMDF_TRACKER_H_
#define ASMDF_TRACKER_H_

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "asmdf/measures.h"
#include "asmdf/picker.h"
#include "asmdf/signal.h"

namespace asmdf {

// Search band in Hz, turned into a lag range per sample rate.
struct PitchBand {
  double f_min_hz = 50.0;
  double f_max_hz = 500.0;
};

struct TrackerConfig {
  FramingConfig framing;
  std::variant<PitchBand, LagRange> lag = PitchBand{};
  // Lower bound on k applied on top of a pitch band.
  std::size_t min_lag = 2;
  Measure measure = Measure::kAsmdf;
  PickerStrategy picker;
  // Frames whose mean-square amplitude is below this are unvoiced. 0 = off.
  double energy_gate = 0.0;
};

// Lag range the tracker searches for the given config. For a band:
//   k_min = max(min_lag, ceil(fs / f_max)),
//   k_max = min(floor(fs / f_min), MaxLagFor(window_size)).
// Throws DomainError when the band is invalid for fs or the range is empty.
LagRange ResolveLagRange(const TrackerConfig& config, double sample_rate_hz);

struct ContourEntry {
  double time_ms = 0.0;
  std::optional<double> pitch_hz;  // nullopt = unvoiced

  bool voiced() const { return pitch_hz.has_value(); }
  friend bool operator==(const ContourEntry&, const ContourEntry&) = default;
};

struct PitchContour {
  std::vector<ContourEntry> entries;
  std::optional<Measure> source;
  std::optional<TrackerConfig> config;

  std::size_t size() const { return entries.size(); }
  std::size_t VoicedCount() const;
};

// One entry per frame of FrameIter(signal, config.framing). Constant frames,
// frames below the energy gate and frames without a pick are unvoiced.
// Throws EmptyInputError if the signal is shorter than one window.
PitchContour Track(const Signal& signal, const TrackerConfig& config);

struct MethodContours {
  PitchContour asmdf;
  PitchContour amdf;
  PitchContour autocorr;

  const PitchContour& For(Measure measure) const;
};

// Track() once per measure with identical framing, lag range and picker.
MethodContours TrackAllMethods(const Signal& signal,
                               const TrackerConfig& config);

}  // namespace asmdf

#endif  // ASMDF_TRACKER_H_
