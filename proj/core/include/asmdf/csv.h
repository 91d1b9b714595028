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

// Text formats. All files are UTF-8 with LF line endings and '.' decimals.
//
// Contour:      time_ms,pitch_hz
//               0.000,200
//               5.000,unvoiced
//   time_ms is written with 3 decimals, pitch_hz with 6 significant digits.
//
// Comparison:   time_ms,asmdf_hz,amdf_hz,autocorr_hz
// Lag curves:   k,asmdf,amdf,autocorr     (undefined values are "nan")
// Eval report:  metric,value

#ifndef ASMDF_CSV_H_
#define ASMDF_CSV_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "asmdf/evaluation.h"
#include "asmdf/measures.h"
#include "asmdf/tracker.h"

namespace asmdf {

inline constexpr std::string_view kUnvoicedToken = "unvoiced";

std::string FormatContourCsv(const PitchContour& contour);
// ParseError (with 1-based line number) on a bad header, a row that is not
// two fields, an unparsable or negative number, or a non-increasing time.
PitchContour ParseContourCsv(std::string_view text);

void WriteContourCsv(const std::filesystem::path& path,
                     const PitchContour& contour);
PitchContour ReadContourCsv(const std::filesystem::path& path);

// AlignmentError unless the three contours have identical timestamps.
std::string FormatCompareCsv(const MethodContours& contours);

// AlignmentError unless the curves are ASMDF, AMDF and autocorrelation
// (in that order) over the same lag range.
std::string FormatLagCurveCsv(const LagCurve& asmdf, const LagCurve& amdf,
                              const LagCurve& autocorr);
void WriteLagCurveCsv(const std::filesystem::path& path, const LagCurve& asmdf,
                      const LagCurve& amdf, const LagCurve& autocorr);

std::string FormatEvalReport(const EvalReport& report);

// Writes through a temporary file and rename.
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace asmdf

#endif  // ASMDF_CSV_H_
