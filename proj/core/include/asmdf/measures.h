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

// Lag-domain periodicity measures on a single frame.
//
// Three measures are provided, all functions of a trial period k (in
// samples):
//
//   autocovariance   r(k) = 1/(n-k) * sum_{i<n-k} (y[i]-m)(y[i+k]-m)
//   autocorrelation  rho(k) = r(k) / r(0)                  (peaks at period)
//   AMDF             D(k) = 1/(n-k) * sum_{j<n-k} |y[j+k]-y[j]|   (dips)
//   ASMDF            g(k) = mean over residue classes i mod k with at least
//                           two members of their sample variance   (dips)
//
// g(k) is zero whenever k is a multiple of an exact integer period, since
// every residue class then samples a single phase of the waveform.
// AsmdfPairSum() evaluates the same quantity through ordered pairs whose
// index distance is divisible by k:
//
//   g'(k) = 1 / (2|C_k|) * sum_{(i,j) in C_k} (y[i]-y[j])^2
//
// which coincides with g(k) whenever all classes have equal size (k | n).
//
// Every summation runs left to right in index order, so results are
// bitwise reproducible. Passing an OpCounter tallies floating point
// add/sub/mul/div/abs operations executed inside the kernel.

#ifndef ASMDF_MEASURES_H_
#define ASMDF_MEASURES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asmdf/signal.h"

namespace asmdf {

enum class Measure { kAsmdf, kAmdf, kAutocorrelation };

inline constexpr Measure kAllMeasures[] = {Measure::kAsmdf, Measure::kAmdf,
                                           Measure::kAutocorrelation};

std::string_view MeasureName(Measure measure);
// Accepts "asmdf", "amdf", "autocorr"/"autocorrelation".
std::optional<Measure> ParseMeasure(std::string_view name);
// Autocorrelation peaks at the period; the other two dip.
constexpr bool PeaksAtPeriod(Measure measure) {
  return measure == Measure::kAutocorrelation;
}

struct OpCounter {
  std::uint64_t count = 0;
  void Add(std::uint64_t n) { count += n; }
};

// Requires k < n; DomainError otherwise.
double Autocovariance(const Frame& frame, std::size_t k,
                      OpCounter* ops = nullptr);

// Throws UndefinedMeasureError for a constant frame.
double Autocorrelation(const Frame& frame, std::size_t k,
                       OpCounter* ops = nullptr);

// Requires 1 <= k < n.
double Amdf(const Frame& frame, std::size_t k, OpCounter* ops = nullptr);

// The k residue classes of indices modulo k, each in index order.
// Requires 1 <= k < n.
std::vector<std::vector<double>> ResidueClasses(const Frame& frame,
                                                std::size_t k);

// Mean of the (m-1)-denominator sample variances over residue classes with
// m >= 2 members. Requires 1 <= k < n.
double AsmdfG(const Frame& frame, std::size_t k, OpCounter* ops = nullptr);

// Pair-sum form; see file comment. Requires 1 <= k < n.
double AsmdfPairSum(const Frame& frame, std::size_t k);

// Dispatches to one of the functions above.
double EvaluateMeasure(Measure measure, const Frame& frame, std::size_t k,
                       OpCounter* ops = nullptr);

// Per-lag values of one measure. Lags where the measure is undefined are
// flagged rather than filled.
class LagCurve {
 public:
  LagCurve(Measure measure, LagRange range, std::vector<double> values,
           std::vector<bool> defined);

  Measure measure() const { return measure_; }
  const LagRange& range() const { return range_; }
  std::size_t k_min() const { return range_.k_min; }
  std::size_t k_max() const { return range_.k_max; }
  std::size_t size() const { return values_.size(); }

  bool defined(std::size_t k) const;
  // Value at lag k, or nullopt if undefined. DomainError if k is outside
  // the range.
  std::optional<double> at(std::size_t k) const;

  const std::vector<double>& values() const { return values_; }
  const std::vector<bool>& defined_mask() const { return defined_; }
  std::size_t DefinedCount() const;

 private:
  Measure measure_;
  LagRange range_;
  std::vector<double> values_;
  std::vector<bool> defined_;
};

// Evaluates `measure` at every lag in `range`. The range must satisfy
// LagRange::CheckFits(frame.size()). For a constant frame the
// autocorrelation curve comes back with every lag undefined.
LagCurve ComputeLagCurve(const Frame& frame, const LagRange& range,
                         Measure measure, OpCounter* ops = nullptr);

}  // namespace asmdf

#endif  // ASMDF_MEASURES_H_
