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

// Sampled signals, analysis frames and lag ranges.
//
// A Signal owns its samples; a Frame is a non-owning window into a Signal
// (or into any contiguous buffer) and must not outlive it. All amplitudes
// are doubles; integer PCM is normalized when it is read.

#ifndef ASMDF_SIGNAL_H_
#define ASMDF_SIGNAL_H_

#include <cstddef>
#include <span>
#include <vector>

namespace asmdf {

class Frame;

class Signal {
 public:
  // Throws DomainError if sample_rate_hz <= 0 or any sample is not finite,
  // EmptyInputError if samples is empty.
  Signal(std::vector<double> samples, double sample_rate_hz);

  std::span<const double> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  double sample_rate_hz() const { return sample_rate_hz_; }
  double duration_ms() const;

  // Frame covering [start, start + length). Throws DomainError if it does
  // not fit or length < 2.
  Frame Slice(std::size_t start, std::size_t length) const;

 private:
  std::vector<double> samples_;
  double sample_rate_hz_;
};

class Frame {
 public:
  // Frames shorter than two samples are rejected with EmptyInputError.
  explicit Frame(std::span<const double> samples, std::size_t start_index = 0,
                 double sample_rate_hz = 1.0);

  std::span<const double> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  double operator[](std::size_t i) const { return samples_[i]; }
  std::size_t start_index() const { return start_index_; }
  double sample_rate_hz() const { return sample_rate_hz_; }
  double start_time_ms() const;

  bool IsConstant() const;
  double MeanSquare() const;

 private:
  std::span<const double> samples_;
  std::size_t start_index_;
  double sample_rate_hz_;
};

// Largest admissible k_max for a frame of n samples: floor((n+1)/2) - 2,
// or 0 when no lag is admissible.
std::size_t MaxLagFor(std::size_t frame_length);

struct LagRange {
  std::size_t k_min = 1;
  std::size_t k_max = 1;

  // Validates 1 <= k_min <= k_max; throws DomainError otherwise.
  static LagRange Make(std::size_t k_min, std::size_t k_max);

  std::size_t count() const { return k_max - k_min + 1; }
  bool Contains(std::size_t k) const { return k >= k_min && k <= k_max; }
  // Throws DomainError unless k_max <= MaxLagFor(frame_length).
  void CheckFits(std::size_t frame_length) const;

  friend bool operator==(const LagRange&, const LagRange&) = default;
};

struct FramingConfig {
  std::size_t window_size = 400;
  std::size_t hop = 55;

  // Throws DomainError if window_size < 2 or hop < 1.
  void Validate() const;
  // Number of complete windows in a signal of the given length.
  std::size_t FrameCount(std::size_t signal_length) const;
};

// Frames at start indices 0, hop, 2*hop, ...; a trailing partial window is
// dropped. Throws EmptyInputError when the window exceeds the signal.
std::vector<Frame> FrameIter(const Signal& signal, const FramingConfig& config);

// sample_rate_hz / k. Throws DomainError for k == 0.
double LagToFreq(std::size_t k, double sample_rate_hz);

}  // namespace asmdf

#endif  // ASMDF_SIGNAL_H_
