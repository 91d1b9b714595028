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

#include "asmdf/evaluation.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <string>

#include "asmdf/errors.h"

namespace asmdf {
namespace {

// Slack on top of half a frame step, covering 3-decimal CSV timestamps.
constexpr double kTimeSlackMs = 1e-3;

void AddIfUsable(ContourPair& pair, const std::optional<double>& truth,
                 const std::optional<double>& estimate) {
  if (!truth || !estimate || *truth == 0.0) {
    ++pair.excluded;
    return;
  }
  pair.truth.push_back(*truth);
  pair.estimate.push_back(*estimate);
}

double FrameStep(const PitchContour& contour) {
  double step = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < contour.entries.size(); ++i) {
    const double d = contour.entries[i].time_ms - contour.entries[i - 1].time_ms;
    if (d > 0.0) step = std::min(step, d);
  }
  return step;
}

void RequireTwo(std::span<const double> errors) {
  if (errors.size() < 2) {
    throw InsufficientDataError("need at least two errors, got " +
                                std::to_string(errors.size()));
  }
}

}  // namespace

ContourPair MakeContourPair(std::span<const std::optional<double>> truth,
                            std::span<const std::optional<double>> estimate) {
  if (truth.size() != estimate.size()) {
    throw AlignmentError("contours have " + std::to_string(truth.size()) +
                         " and " + std::to_string(estimate.size()) +
                         " frames");
  }
  ContourPair pair;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    AddIfUsable(pair, truth[i], estimate[i]);
  }
  return pair;
}

ContourPair AlignContours(const PitchContour& truth,
                          const PitchContour& estimate) {
  ContourPair pair;
  if (truth.entries.empty()) return pair;
  if (estimate.entries.empty()) {
    throw AlignmentError("estimate contour is empty");
  }
  double step = FrameStep(truth);
  if (!std::isfinite(step)) step = FrameStep(estimate);
  const double tolerance =
      (std::isfinite(step) ? step / 2.0 : 0.0) + kTimeSlackMs;

  const auto& est = estimate.entries;
  for (const ContourEntry& t : truth.entries) {
    auto it = std::lower_bound(
        est.begin(), est.end(), t.time_ms,
        [](const ContourEntry& e, double time) { return e.time_ms < time; });
    const ContourEntry* nearest = nullptr;
    double best = std::numeric_limits<double>::infinity();
    if (it != est.end()) {
      best = std::abs(it->time_ms - t.time_ms);
      nearest = &*it;
    }
    if (it != est.begin()) {
      const auto prev = std::prev(it);
      if (std::abs(prev->time_ms - t.time_ms) <= best) {
        best = std::abs(prev->time_ms - t.time_ms);
        nearest = &*prev;
      }
    }
    if (nearest == nullptr || best > tolerance) {
      throw AlignmentError("no estimate frame within " +
                           std::to_string(tolerance) + " ms of truth time " +
                           std::to_string(t.time_ms) + " ms");
    }
    AddIfUsable(pair, t.pitch_hz, nearest->pitch_hz);
  }
  return pair;
}

std::vector<double> RelativeError(const ContourPair& pair) {
  if (pair.size() == 0) {
    throw InsufficientDataError("no frame is voiced in both contours");
  }
  std::vector<double> errors(pair.size());
  for (std::size_t i = 0; i < pair.size(); ++i) {
    errors[i] = (pair.truth[i] - pair.estimate[i]) / pair.truth[i];
  }
  return errors;
}

double MeanError(std::span<const double> errors) {
  if (errors.empty()) throw InsufficientDataError("no errors to average");
  double sum = 0.0;
  for (double e : errors) sum += e;
  return sum / static_cast<double>(errors.size());
}

double SigmaE(std::span<const double> errors) {
  RequireTwo(errors);
  const double mean = MeanError(errors);
  double sum_sq = 0.0;
  for (double e : errors) sum_sq += e * e;
  const double radicand =
      sum_sq / static_cast<double>(errors.size() - 1) - mean * mean;
  return std::sqrt(std::max(radicand, 0.0));
}

double StandardDeviation(std::span<const double> errors) {
  RequireTwo(errors);
  const double mean = MeanError(errors);
  double ss = 0.0;
  for (double e : errors) ss += (e - mean) * (e - mean);
  return std::sqrt(ss / static_cast<double>(errors.size() - 1));
}

double PearsonR(const ContourPair& pair) {
  RequireTwo(pair.truth);
  const double mx = MeanError(pair.truth);
  const double my = MeanError(pair.estimate);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const double dx = pair.truth[i] - mx;
    const double dy = pair.estimate[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw UndefinedCorrelationError(
        "correlation is undefined for a constant contour");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

EvalReport Evaluate(const ContourPair& pair) {
  if (pair.size() < 2) {
    throw InsufficientDataError("need at least two usable frames, got " +
                                std::to_string(pair.size()));
  }
  const std::vector<double> errors = RelativeError(pair);
  EvalReport report;
  report.length = errors.size();
  report.mean_error = MeanError(errors);
  report.sigma_e = SigmaE(errors);
  report.sigma_e_standard = StandardDeviation(errors);
  try {
    report.pearson_r = PearsonR(pair);
  } catch (const UndefinedCorrelationError&) {
    report.pearson_r.reset();
  }
  report.gross_error_flag = report.sigma_e > kGrossErrorThreshold;
  return report;
}

}  // namespace asmdf
