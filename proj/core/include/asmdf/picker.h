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

// Period picking on a LagCurve.
//
// All strategies work on the "oriented" curve: values as-is for dip
// measures (ASMDF, AMDF) and negated for autocorrelation, so that the
// period is always a minimum.
//
//   kGlobalMin  lag of the smallest oriented value. Values within
//               kTieTolerance * max|value| of the best are ties and the
//               smallest such lag wins, so exact period multiples whose
//               values differ only by rounding resolve to the fundamental.
//   kFirstDip   first local minimum, in increasing k, that is deep enough.
//   kSecondDip  second such local minimum.
//
// A local minimum is strictly below its nearest defined neighbour on both
// sides; for a flat run the leftmost lag is reported. Curve endpoints are
// never local minima. A dip at oriented value v is deep enough when
//
//   (max - v) / (max - min) >= dip_threshold
//
// with min/max taken over the defined lags, i.e. dip_threshold = 1 admits
// only the global minimum (and its ties), smaller values relax the test.

#ifndef ASMDF_PICKER_H_
#define ASMDF_PICKER_H_

#include <cstddef>
#include <optional>
#include <string_view>

#include "asmdf/measures.h"
#include "asmdf/signal.h"

namespace asmdf {

inline constexpr double kTieTolerance = 1e-12;

struct PickerStrategy {
  enum class Kind { kGlobalMin, kFirstDip, kSecondDip };

  Kind kind = Kind::kGlobalMin;
  double dip_threshold = 0.5;

  static PickerStrategy GlobalMin() { return {Kind::kGlobalMin, 0.5}; }
  static PickerStrategy FirstDip(double threshold = 0.5) {
    return {Kind::kFirstDip, threshold};
  }
  static PickerStrategy SecondDip(double threshold = 0.5) {
    return {Kind::kSecondDip, threshold};
  }

  // Throws DomainError unless dip_threshold is in (0, 1].
  void Validate() const;
};

std::string_view PickerName(PickerStrategy::Kind kind);
// "global", "dip1", "dip2".
std::optional<PickerStrategy::Kind> ParsePickerKind(std::string_view name);

// Chosen lag, or nullopt when the curve has no defined lag or no dip
// qualifies.
std::optional<std::size_t> PickPeriod(const LagCurve& curve,
                                      const PickerStrategy& strategy);

// LagToFreq(PickPeriod(ComputeLagCurve(frame, range, measure))).
std::optional<double> EstimatePitch(const Frame& frame, const LagRange& range,
                                    Measure measure,
                                    const PickerStrategy& strategy);

}  // namespace asmdf

#endif  // ASMDF_PICKER_H_
