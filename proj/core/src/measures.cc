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

#include "asmdf/measures.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "asmdf/errors.h"

namespace asmdf {
namespace {

inline void Count(OpCounter* ops, std::uint64_t n) {
  if (ops != nullptr) ops->Add(n);
}

void CheckLag(const Frame& frame, std::size_t k, bool allow_zero) {
  if (!allow_zero && k == 0) throw DomainError("lag must be positive");
  if (k >= frame.size()) {
    throw DomainError("lag " + std::to_string(k) +
                      " must be smaller than the frame length " +
                      std::to_string(frame.size()));
  }
}

double Mean(const Frame& frame, OpCounter* ops) {
  double sum = 0.0;
  for (double v : frame.samples()) sum += v;
  Count(ops, frame.size() + 1);
  return sum / static_cast<double>(frame.size());
}

// r(k) about a precomputed mean.
double CenteredCovariance(const Frame& frame, std::size_t k, double mean,
                          OpCounter* ops) {
  const std::size_t n = frame.size();
  const std::size_t terms = n - k;
  double acc = 0.0;
  for (std::size_t i = 0; i < terms; ++i) {
    acc += (frame[i] - mean) * (frame[i + k] - mean);
  }
  Count(ops, 4 * terms + 1);
  return acc / static_cast<double>(terms);
}

}  // namespace

std::string_view MeasureName(Measure measure) {
  switch (measure) {
    case Measure::kAsmdf:
      return "asmdf";
    case Measure::kAmdf:
      return "amdf";
    case Measure::kAutocorrelation:
      return "autocorr";
  }
  return "unknown";
}

std::optional<Measure> ParseMeasure(std::string_view name) {
  if (name == "asmdf") return Measure::kAsmdf;
  if (name == "amdf") return Measure::kAmdf;
  if (name == "autocorr" || name == "autocorrelation") {
    return Measure::kAutocorrelation;
  }
  return std::nullopt;
}

double Autocovariance(const Frame& frame, std::size_t k, OpCounter* ops) {
  CheckLag(frame, k, /*allow_zero=*/true);
  return CenteredCovariance(frame, k, Mean(frame, ops), ops);
}

double Autocorrelation(const Frame& frame, std::size_t k, OpCounter* ops) {
  CheckLag(frame, k, /*allow_zero=*/true);
  if (frame.IsConstant()) {
    throw UndefinedMeasureError("autocorrelation of a constant frame");
  }
  const double mean = Mean(frame, ops);
  const double r0 = CenteredCovariance(frame, 0, mean, ops);
  if (k == 0) return 1.0;
  const double rk = CenteredCovariance(frame, k, mean, ops);
  Count(ops, 1);
  return rk / r0;
}

double Amdf(const Frame& frame, std::size_t k, OpCounter* ops) {
  CheckLag(frame, k, /*allow_zero=*/false);
  const std::size_t terms = frame.size() - k;
  double acc = 0.0;
  for (std::size_t j = 0; j < terms; ++j) {
    acc += std::abs(frame[j + k] - frame[j]);
  }
  Count(ops, 3 * terms + 1);
  return acc / static_cast<double>(terms);
}

std::vector<std::vector<double>> ResidueClasses(const Frame& frame,
                                                std::size_t k) {
  CheckLag(frame, k, /*allow_zero=*/false);
  std::vector<std::vector<double>> classes(k);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    classes[i % k].push_back(frame[i]);
  }
  return classes;
}

double AsmdfG(const Frame& frame, std::size_t k, OpCounter* ops) {
  CheckLag(frame, k, /*allow_zero=*/false);
  const std::size_t n = frame.size();
  double variance_sum = 0.0;
  std::size_t q = 0;
  // Classes i < n - k have at least two members; the rest are singletons.
  for (std::size_t i = 0; i < k && i + k < n; ++i) {
    double sum = 0.0;
    std::size_t m = 0;
    for (std::size_t p = i; p < n; p += k, ++m) sum += frame[p];
    const double mean = sum / static_cast<double>(m);
    double ss = 0.0;
    for (std::size_t p = i; p < n; p += k) {
      const double d = frame[p] - mean;
      ss += d * d;
    }
    variance_sum += ss / static_cast<double>(m - 1);
    ++q;
    Count(ops, 4 * m + 3);
  }
  if (q == 0) {
    throw UndefinedMeasureError("no residue class with two members at lag " +
                                std::to_string(k));
  }
  Count(ops, 1);
  return variance_sum / static_cast<double>(q);
}

double AsmdfPairSum(const Frame& frame, std::size_t k) {
  CheckLag(frame, k, /*allow_zero=*/false);
  const std::size_t n = frame.size();
  // Enumerate unordered pairs i < j with k | (j - i); each stands for the
  // two ordered pairs (i,j) and (j,i), which contribute equally.
  double acc = 0.0;
  std::size_t unordered = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + k; j < n; j += k) {
      const double d = frame[i] - frame[j];
      acc += d * d;
      ++unordered;
    }
  }
  if (unordered == 0) {
    throw UndefinedMeasureError("no index pair at distance divisible by " +
                                std::to_string(k));
  }
  const double ordered_sum = 2.0 * acc;
  const double ordered_count = 2.0 * static_cast<double>(unordered);
  return ordered_sum / (2.0 * ordered_count);
}

double EvaluateMeasure(Measure measure, const Frame& frame, std::size_t k,
                       OpCounter* ops) {
  switch (measure) {
    case Measure::kAsmdf:
      return AsmdfG(frame, k, ops);
    case Measure::kAmdf:
      return Amdf(frame, k, ops);
    case Measure::kAutocorrelation:
      return Autocorrelation(frame, k, ops);
  }
  throw DomainError("unknown measure");
}

LagCurve::LagCurve(Measure measure, LagRange range, std::vector<double> values,
                   std::vector<bool> defined)
    : measure_(measure),
      range_(range),
      values_(std::move(values)),
      defined_(std::move(defined)) {
  if (range_.k_min < 1 || range_.k_min > range_.k_max) {
    throw DomainError("invalid lag range");
  }
  if (values_.size() != range_.count() || defined_.size() != range_.count()) {
    throw DomainError("lag curve length does not match its lag range");
  }
}

bool LagCurve::defined(std::size_t k) const {
  return range_.Contains(k) && defined_[k - range_.k_min];
}

std::optional<double> LagCurve::at(std::size_t k) const {
  if (!range_.Contains(k)) {
    throw DomainError("lag " + std::to_string(k) + " outside curve range");
  }
  const std::size_t idx = k - range_.k_min;
  if (!defined_[idx]) return std::nullopt;
  return values_[idx];
}

std::size_t LagCurve::DefinedCount() const {
  std::size_t count = 0;
  for (bool d : defined_) count += d ? 1 : 0;
  return count;
}

LagCurve ComputeLagCurve(const Frame& frame, const LagRange& range,
                         Measure measure, OpCounter* ops) {
  range.CheckFits(frame.size());
  std::vector<double> values(range.count(), 0.0);
  std::vector<bool> defined(range.count(), true);

  if (measure == Measure::kAutocorrelation) {
    if (frame.IsConstant()) {
      std::fill(defined.begin(), defined.end(), false);
      return LagCurve(measure, range, std::move(values), std::move(defined));
    }
    // Mean and r(0) are shared by every lag.
    const double mean = Mean(frame, ops);
    const double r0 = CenteredCovariance(frame, 0, mean, ops);
    for (std::size_t k = range.k_min; k <= range.k_max; ++k) {
      values[k - range.k_min] = CenteredCovariance(frame, k, mean, ops) / r0;
      Count(ops, 1);
    }
    return LagCurve(measure, range, std::move(values), std::move(defined));
  }

  for (std::size_t k = range.k_min; k <= range.k_max; ++k) {
    try {
      values[k - range.k_min] = EvaluateMeasure(measure, frame, k, ops);
    } catch (const UndefinedMeasureError&) {
      defined[k - range.k_min] = false;
    }
  }
  return LagCurve(measure, range, std::move(values), std::move(defined));
}

}  // namespace asmdf
