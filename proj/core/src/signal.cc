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

#include "asmdf/signal.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "asmdf/errors.h"

namespace asmdf {

Signal::Signal(std::vector<double> samples, double sample_rate_hz)
    : samples_(std::move(samples)), sample_rate_hz_(sample_rate_hz) {
  if (!(sample_rate_hz_ > 0.0) || !std::isfinite(sample_rate_hz_)) {
    throw DomainError("sample rate must be positive and finite");
  }
  if (samples_.empty()) throw EmptyInputError("signal has no samples");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) {
      throw DomainError("sample " + std::to_string(i) + " is not finite");
    }
  }
}

double Signal::duration_ms() const {
  return static_cast<double>(samples_.size()) / sample_rate_hz_ * 1000.0;
}

Frame Signal::Slice(std::size_t start, std::size_t length) const {
  if (start > samples_.size() || length > samples_.size() - start) {
    throw DomainError("frame [" + std::to_string(start) + ", +" +
                      std::to_string(length) + ") exceeds signal of " +
                      std::to_string(samples_.size()) + " samples");
  }
  return Frame(std::span<const double>(samples_).subspan(start, length), start,
               sample_rate_hz_);
}

Frame::Frame(std::span<const double> samples, std::size_t start_index,
             double sample_rate_hz)
    : samples_(samples),
      start_index_(start_index),
      sample_rate_hz_(sample_rate_hz) {
  if (samples_.size() < 2) {
    throw EmptyInputError("a frame needs at least two samples");
  }
  if (!(sample_rate_hz_ > 0.0)) {
    throw DomainError("sample rate must be positive");
  }
}

double Frame::start_time_ms() const {
  return static_cast<double>(start_index_) / sample_rate_hz_ * 1000.0;
}

bool Frame::IsConstant() const {
  const double first = samples_.front();
  return std::all_of(samples_.begin(), samples_.end(),
                     [first](double v) { return v == first; });
}

double Frame::MeanSquare() const {
  double acc = 0.0;
  for (double v : samples_) acc += v * v;
  return acc / static_cast<double>(samples_.size());
}

std::size_t MaxLagFor(std::size_t frame_length) {
  const std::size_t half = (frame_length + 1) / 2;
  return half > 2 ? half - 2 : 0;
}

LagRange LagRange::Make(std::size_t k_min, std::size_t k_max) {
  if (k_min < 1) throw DomainError("k_min must be at least 1");
  if (k_min > k_max) {
    throw DomainError("empty lag range [" + std::to_string(k_min) + ", " +
                      std::to_string(k_max) + "]");
  }
  return LagRange{k_min, k_max};
}

void LagRange::CheckFits(std::size_t frame_length) const {
  const std::size_t limit = MaxLagFor(frame_length);
  if (k_min < 1 || k_min > k_max || k_max > limit) {
    throw DomainError("lag range [" + std::to_string(k_min) + ", " +
                      std::to_string(k_max) + "] invalid for a frame of " +
                      std::to_string(frame_length) + " samples (k_max <= " +
                      std::to_string(limit) + ")");
  }
}

void FramingConfig::Validate() const {
  if (window_size < 2) throw DomainError("window size must be at least 2");
  if (hop < 1) throw DomainError("hop must be at least 1");
}

std::size_t FramingConfig::FrameCount(std::size_t signal_length) const {
  if (signal_length < window_size) return 0;
  return (signal_length - window_size) / hop + 1;
}

std::vector<Frame> FrameIter(const Signal& signal,
                             const FramingConfig& config) {
  config.Validate();
  if (config.window_size > signal.size()) {
    throw EmptyInputError("window of " + std::to_string(config.window_size) +
                          " samples exceeds signal of " +
                          std::to_string(signal.size()));
  }
  const std::size_t count = config.FrameCount(signal.size());
  std::vector<Frame> frames;
  frames.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    frames.push_back(signal.Slice(j * config.hop, config.window_size));
  }
  return frames;
}

double LagToFreq(std::size_t k, double sample_rate_hz) {
  if (k == 0) throw DomainError("lag must be positive");
  return sample_rate_hz / static_cast<double>(k);
}

}  // namespace asmdf
