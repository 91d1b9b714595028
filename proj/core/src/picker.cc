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

#include "asmdf/picker.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "asmdf/errors.h"

namespace asmdf {
namespace {

struct Point {
  std::size_t k;
  double v;  // oriented: smaller is more periodic
};

std::vector<Point> OrientedPoints(const LagCurve& curve) {
  const double sign = PeaksAtPeriod(curve.measure()) ? -1.0 : 1.0;
  std::vector<Point> points;
  points.reserve(curve.size());
  for (std::size_t k = curve.k_min(); k <= curve.k_max(); ++k) {
    if (curve.defined(k)) {
      points.push_back({k, sign * curve.values()[k - curve.k_min()]});
    }
  }
  return points;
}

double TieTolerance(const std::vector<Point>& points) {
  double scale = 0.0;
  for (const Point& p : points) scale = std::max(scale, std::abs(p.v));
  return kTieTolerance * scale;
}

std::size_t GlobalMin(const std::vector<Point>& points, double tol) {
  double best = points.front().v;
  for (const Point& p : points) best = std::min(best, p.v);
  for (const Point& p : points) {
    if (p.v <= best + tol) return p.k;
  }
  return points.front().k;
}

// Local minima in increasing k that pass the depth test.
std::vector<std::size_t> QualifyingDips(const std::vector<Point>& points,
                                        double threshold, double tol) {
  std::vector<std::size_t> dips;
  if (points.size() < 3) return dips;
  double lo = points.front().v;
  double hi = points.front().v;
  for (const Point& p : points) {
    lo = std::min(lo, p.v);
    hi = std::max(hi, p.v);
  }
  const double ceiling = lo + (1.0 - threshold) * (hi - lo) + tol;

  std::size_t a = 1;
  while (a + 1 < points.size()) {
    // Extend over a flat run starting at a.
    std::size_t b = a;
    while (b + 1 < points.size() && points[b + 1].v == points[a].v) ++b;
    if (b + 1 >= points.size()) break;
    const bool left_higher = points[a - 1].v > points[a].v;
    const bool right_higher = points[b + 1].v > points[b].v;
    if (left_higher && right_higher && points[a].v <= ceiling) {
      dips.push_back(points[a].k);
    }
    a = b + 1;
  }
  return dips;
}

}  // namespace

void PickerStrategy::Validate() const {
  if (!(dip_threshold > 0.0 && dip_threshold <= 1.0)) {
    throw DomainError("dip threshold must lie in (0, 1], got " +
                      std::to_string(dip_threshold));
  }
}

std::string_view PickerName(PickerStrategy::Kind kind) {
  switch (kind) {
    case PickerStrategy::Kind::kGlobalMin:
      return "global";
    case PickerStrategy::Kind::kFirstDip:
      return "dip1";
    case PickerStrategy::Kind::kSecondDip:
      return "dip2";
  }
  return "unknown";
}

std::optional<PickerStrategy::Kind> ParsePickerKind(std::string_view name) {
  if (name == "global") return PickerStrategy::Kind::kGlobalMin;
  if (name == "dip1") return PickerStrategy::Kind::kFirstDip;
  if (name == "dip2") return PickerStrategy::Kind::kSecondDip;
  return std::nullopt;
}

std::optional<std::size_t> PickPeriod(const LagCurve& curve,
                                      const PickerStrategy& strategy) {
  strategy.Validate();
  const std::vector<Point> points = OrientedPoints(curve);
  if (points.empty()) return std::nullopt;
  const double tol = TieTolerance(points);

  switch (strategy.kind) {
    case PickerStrategy::Kind::kGlobalMin:
      return GlobalMin(points, tol);
    case PickerStrategy::Kind::kFirstDip: {
      const auto dips = QualifyingDips(points, strategy.dip_threshold, tol);
      if (dips.empty()) return std::nullopt;
      return dips[0];
    }
    case PickerStrategy::Kind::kSecondDip: {
      const auto dips = QualifyingDips(points, strategy.dip_threshold, tol);
      if (dips.size() < 2) return std::nullopt;
      return dips[1];
    }
  }
  return std::nullopt;
}

std::optional<double> EstimatePitch(const Frame& frame, const LagRange& range,
                                    Measure measure,
                                    const PickerStrategy& strategy) {
  const LagCurve curve = ComputeLagCurve(frame, range, measure);
  const std::optional<std::size_t> k = PickPeriod(curve, strategy);
  if (!k) return std::nullopt;
  return LagToFreq(*k, frame.sample_rate_hz());
}

}  // namespace asmdf
