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

#include "asmdf/csv.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

#include "asmdf/errors.h"
#include "file_util.h"

namespace asmdf {
namespace {

constexpr std::string_view kContourHeader = "time_ms,pitch_hz";

std::string Printf(const char* fmt, double v) {
  char buf[64];
  const int len = std::snprintf(buf, sizeof(buf), fmt, v);
  return std::string(buf, static_cast<std::size_t>(len));
}

std::string FormatTime(double time_ms) { return Printf("%.3f", time_ms); }

std::string FormatPitch(const std::optional<double>& pitch) {
  if (!pitch) return std::string(kUnvoicedToken);
  return Printf("%.6g", *pitch);
}

std::string FormatValue(const LagCurve& curve, std::size_t k) {
  const auto v = curve.at(k);
  if (!v) return "nan";
  return Printf("%.17g", *v);
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::optional<double> ParseNumber(std::string_view field) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

void RequireSameTimes(const PitchContour& a, const PitchContour& b) {
  if (a.size() != b.size()) {
    throw AlignmentError("contours have different frame counts");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.entries[i].time_ms != b.entries[i].time_ms) {
      throw AlignmentError("contours differ in time at frame " +
                           std::to_string(i));
    }
  }
}

}  // namespace

std::string FormatContourCsv(const PitchContour& contour) {
  std::string out(kContourHeader);
  out += '\n';
  for (const ContourEntry& e : contour.entries) {
    out += FormatTime(e.time_ms);
    out += ',';
    out += FormatPitch(e.pitch_hz);
    out += '\n';
  }
  return out;
}

PitchContour ParseContourCsv(std::string_view text) {
  const std::vector<std::string_view> lines = SplitLines(text);
  if (lines.empty() || lines[0] != kContourHeader) {
    throw ParseError(1, "expected header '" + std::string(kContourHeader) +
                            "'");
  }
  PitchContour contour;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = lines[i];
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos ||
        line.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected two comma-separated fields");
    }
    const std::string_view time_field = line.substr(0, comma);
    const std::string_view pitch_field = line.substr(comma + 1);

    const auto time = ParseNumber(time_field);
    if (!time) {
      throw ParseError(line_no,
                       "bad time_ms '" + std::string(time_field) + "'");
    }
    ContourEntry entry;
    entry.time_ms = *time;
    if (pitch_field != kUnvoicedToken) {
      const auto pitch = ParseNumber(pitch_field);
      if (!pitch || *pitch < 0.0) {
        throw ParseError(line_no,
                         "bad pitch_hz '" + std::string(pitch_field) + "'");
      }
      entry.pitch_hz = *pitch;
    }
    if (!contour.entries.empty() &&
        entry.time_ms <= contour.entries.back().time_ms) {
      throw ParseError(line_no, "time_ms must be strictly increasing");
    }
    contour.entries.push_back(entry);
  }
  return contour;
}

void WriteContourCsv(const std::filesystem::path& path,
                     const PitchContour& contour) {
  WriteTextFile(path, FormatContourCsv(contour));
}

PitchContour ReadContourCsv(const std::filesystem::path& path) {
  return ParseContourCsv(internal::ReadFileBytes(path));
}

std::string FormatCompareCsv(const MethodContours& contours) {
  RequireSameTimes(contours.asmdf, contours.amdf);
  RequireSameTimes(contours.asmdf, contours.autocorr);
  std::string out = "time_ms,asmdf_hz,amdf_hz,autocorr_hz\n";
  for (std::size_t i = 0; i < contours.asmdf.size(); ++i) {
    out += FormatTime(contours.asmdf.entries[i].time_ms);
    for (const PitchContour* c :
         {&contours.asmdf, &contours.amdf, &contours.autocorr}) {
      out += ',';
      out += FormatPitch(c->entries[i].pitch_hz);
    }
    out += '\n';
  }
  return out;
}

std::string FormatLagCurveCsv(const LagCurve& asmdf, const LagCurve& amdf,
                              const LagCurve& autocorr) {
  if (asmdf.measure() != Measure::kAsmdf || amdf.measure() != Measure::kAmdf ||
      autocorr.measure() != Measure::kAutocorrelation) {
    throw AlignmentError("lag curves must be asmdf, amdf, autocorr in order");
  }
  if (!(asmdf.range() == amdf.range()) ||
      !(asmdf.range() == autocorr.range())) {
    throw AlignmentError("lag curves cover different lag ranges");
  }
  std::string out = "k,asmdf,amdf,autocorr\n";
  for (std::size_t k = asmdf.k_min(); k <= asmdf.k_max(); ++k) {
    out += std::to_string(k);
    for (const LagCurve* c : {&asmdf, &amdf, &autocorr}) {
      out += ',';
      out += FormatValue(*c, k);
    }
    out += '\n';
  }
  return out;
}

void WriteLagCurveCsv(const std::filesystem::path& path, const LagCurve& asmdf,
                      const LagCurve& amdf, const LagCurve& autocorr) {
  WriteTextFile(path, FormatLagCurveCsv(asmdf, amdf, autocorr));
}

std::string FormatEvalReport(const EvalReport& report) {
  std::string out = "metric,value\n";
  out += "mean_error," + Printf("%.17g", report.mean_error) + "\n";
  out += "sigma_e," + Printf("%.17g", report.sigma_e) + "\n";
  out += "sigma_e_standard," + Printf("%.17g", report.sigma_e_standard) + "\n";
  out += "pearson_r," +
         (report.pearson_r ? Printf("%.17g", *report.pearson_r)
                           : std::string("undefined")) +
         "\n";
  out += std::string("gross_error,") +
         (report.gross_error_flag ? "true" : "false") + "\n";
  out += "length," + std::to_string(report.length) + "\n";
  return out;
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  internal::WriteFileAtomic(path, text);
}

}  // namespace asmdf
