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

// Accuracy of an estimated pitch contour against a reference contour.
//
// Per included frame the relative error is e = (P - P_est) / P. The spread
// statistic reported as sigma_e is
//
//   sigma_e = sqrt( sum(e^2) / (L - 1) - mean(e)^2 )
//
// which is *not* the textbook sample standard deviation: a constant error
// sequence e = c gives |c| / sqrt(L - 1) instead of 0. The unbiased standard
// deviation is reported next to it as sigma_e_standard. A contour whose
// sigma_e exceeds 0.20 is flagged.

#ifndef ASMDF_EVALUATION_H_
#define ASMDF_EVALUATION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "asmdf/tracker.h"

namespace asmdf {

inline constexpr double kGrossErrorThreshold = 0.20;

// Frame-aligned truth/estimate values restricted to frames where both are
// voiced and the truth is non-zero.
struct ContourPair {
  std::vector<double> truth;
  std::vector<double> estimate;
  std::size_t excluded = 0;

  std::size_t size() const { return truth.size(); }
};

// Index-aligned construction; nullopt marks an unvoiced frame. Throws
// AlignmentError if the lengths differ.
ContourPair MakeContourPair(std::span<const std::optional<double>> truth,
                            std::span<const std::optional<double>> estimate);

// Matches every truth entry to the estimate entry nearest in time. A match
// further away than half the truth frame step is an AlignmentError.
ContourPair AlignContours(const PitchContour& truth,
                          const PitchContour& estimate);

// e(i) = (P(i) - P_est(i)) / P(i). Throws InsufficientDataError if the pair
// is empty.
std::vector<double> RelativeError(const ContourPair& pair);

double MeanError(std::span<const double> errors);
// The literal spread formula above; a slightly negative radicand from
// rounding is clamped to zero. Needs at least two values.
double SigmaE(std::span<const double> errors);
// sqrt(sum((e - mean)^2) / (L - 1)).
double StandardDeviation(std::span<const double> errors);

// Pearson product-moment correlation of truth and estimate. Throws
// UndefinedCorrelationError if either side is constant.
double PearsonR(const ContourPair& pair);

struct EvalReport {
  double mean_error = 0.0;
  double sigma_e = 0.0;
  double sigma_e_standard = 0.0;
  std::optional<double> pearson_r;  // nullopt when undefined
  bool gross_error_flag = false;
  std::size_t length = 0;  // L_e
};

// Throws InsufficientDataError when fewer than two pairs remain.
EvalReport Evaluate(const ContourPair& pair);

}  // namespace asmdf

#endif  // ASMDF_EVALUATION_H_
