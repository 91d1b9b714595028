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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "asmdf/complexity.h"
#include "asmdf/csv.h"
#include "asmdf/errors.h"
#include "asmdf/evaluation.h"
#include "asmdf/measures.h"
#include "asmdf/picker.h"
#include "asmdf/synth.h"
#include "asmdf/tracker.h"
#include "asmdf/wav.h"

namespace asmdf::cli {
namespace {

// Raised for flag combinations CLI11 cannot express.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct SynthFlags {
  std::string preset;
  std::vector<std::string> sines;
  std::vector<std::string> cosines;
  double rate = 11000.0;
  std::size_t length = 0;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

struct TrackFlags {
  std::string in;
  std::string method = "asmdf";
  std::size_t window = 400;
  std::size_t hop = 55;
  double fmin = 50.0;
  double fmax = 500.0;
  std::size_t min_lag = 2;
  std::string picker = "global";
  double alpha = 0.5;
  double energy_gate = 0.0;
  std::string out;
};

struct EvalFlags {
  std::string truth;
  std::string est;
  std::string out;
};

struct CurveFlags {
  std::string in;
  std::size_t frame_index = 0;
  std::size_t window = 400;
  std::size_t hop = 55;
  std::size_t kmin = 2;
  std::optional<std::size_t> kmax;
  std::string out;
};

struct BenchFlags {
  std::vector<std::size_t> sizes;
  int reps = 3;
  std::string out;
};

void AddTrackingFlags(CLI::App* cmd, TrackFlags& f) {
  cmd->add_option("--in", f.in, "Input WAV (16-bit PCM)")->required();
  cmd->add_option("--window", f.window, "Window length in samples")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
  cmd->add_option("--hop", f.hop, "Hop in samples")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 30));
  cmd->add_option("--fmin", f.fmin, "Lowest pitch searched (Hz)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--fmax", f.fmax, "Highest pitch searched (Hz)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--min-lag", f.min_lag, "Smallest lag ever considered")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 30));
  cmd->add_option("--picker", f.picker, "global, dip1 or dip2")
      ->check(CLI::IsMember({"global", "dip1", "dip2"}));
  cmd->add_option("--alpha", f.alpha, "Dip depth threshold in (0, 1]");
  cmd->add_option("--energy-gate", f.energy_gate,
                  "Mean-square level below which frames are unvoiced")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", f.out, "Output CSV (default: stdout)");
}

TrackerConfig ToTrackerConfig(const TrackFlags& f) {
  TrackerConfig config;
  config.framing = {f.window, f.hop};
  config.lag = PitchBand{f.fmin, f.fmax};
  config.min_lag = f.min_lag;
  const auto measure = ParseMeasure(f.method);
  if (!measure) throw UsageError("unknown method '" + f.method + "'");
  config.measure = *measure;
  config.picker = {*ParsePickerKind(f.picker), f.alpha};
  config.picker.Validate();
  config.energy_gate = f.energy_gate;
  return config;
}

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteTextFile(path, text);
  }
}

// "FREQ[:AMP[:PHASE]]"
SynthComponent ParseComponent(const std::string& text,
                              SynthComponent::Shape shape) {
  SynthComponent c;
  c.shape = shape;
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad component '" + text +
                       "', expected FREQ[:AMP[:PHASE]]");
    }
  }
  if (parts.empty() || parts.size() > 3) {
    throw UsageError("bad component '" + text +
                     "', expected FREQ[:AMP[:PHASE]]");
  }
  c.frequency_hz = parts[0];
  if (parts.size() > 1) c.amplitude = parts[1];
  if (parts.size() > 2) c.phase_rad = parts[2];
  return c;
}

int DoSynth(const SynthFlags& f, std::ostream& out) {
  SynthSpec spec;
  const bool custom = !f.sines.empty() || !f.cosines.empty() || f.noise > 0.0;
  if (!f.preset.empty()) {
    if (custom) throw UsageError("--preset cannot be combined with components");
    spec = f.preset == "exp1" ? Experiment1Spec() : Experiment2Spec();
  } else {
    if (!custom) throw UsageError("give --preset or at least one component");
    spec.sample_rate_hz = f.rate;
    spec.length = f.length > 0
                      ? f.length
                      : static_cast<std::size_t>(std::max(f.rate, 1.0)) + 1;
    for (const auto& s : f.sines) {
      spec.components.push_back(
          ParseComponent(s, SynthComponent::Shape::kSin));
    }
    for (const auto& s : f.cosines) {
      spec.components.push_back(
          ParseComponent(s, SynthComponent::Shape::kCos));
    }
    spec.noise = {f.noise, f.seed};
  }
  const Signal signal = Synth(spec);
  WriteWav(f.out, signal);
  out << "wrote " << signal.size() << " samples at " << signal.sample_rate_hz()
      << " Hz to " << f.out << "\n";
  return kExitOk;
}

int DoTrack(const TrackFlags& f, std::ostream& out) {
  const TrackerConfig config = ToTrackerConfig(f);
  const Signal signal = ReadWav(f.in);
  Emit(f.out, FormatContourCsv(Track(signal, config)), out);
  return kExitOk;
}

int DoCompare(const TrackFlags& f, std::ostream& out) {
  const TrackerConfig config = ToTrackerConfig(f);
  const Signal signal = ReadWav(f.in);
  Emit(f.out, FormatCompareCsv(TrackAllMethods(signal, config)), out);
  return kExitOk;
}

int DoEval(const EvalFlags& f, std::ostream& out) {
  const PitchContour truth = ReadContourCsv(f.truth);
  const PitchContour est = ReadContourCsv(f.est);
  const std::string report = FormatEvalReport(Evaluate(AlignContours(truth, est)));
  out << report;
  if (!f.out.empty()) WriteTextFile(f.out, report);
  return kExitOk;
}

int DoCurve(const CurveFlags& f, std::ostream& out) {
  const FramingConfig framing{f.window, f.hop};
  framing.Validate();
  const LagRange range =
      LagRange::Make(f.kmin, f.kmax.value_or(MaxLagFor(f.window)));
  range.CheckFits(f.window);
  const Signal signal = ReadWav(f.in);
  const std::size_t count = framing.FrameCount(signal.size());
  if (f.frame_index >= count) {
    throw UsageError("frame index " + std::to_string(f.frame_index) +
                     " out of range; signal has " + std::to_string(count) +
                     " frames");
  }
  const Frame frame = signal.Slice(f.frame_index * f.hop, f.window);
  const LagCurve asmdf = ComputeLagCurve(frame, range, Measure::kAsmdf);
  const LagCurve amdf = ComputeLagCurve(frame, range, Measure::kAmdf);
  const LagCurve autocorr =
      ComputeLagCurve(frame, range, Measure::kAutocorrelation);
  Emit(f.out, FormatLagCurveCsv(asmdf, amdf, autocorr), out);
  return kExitOk;
}

int DoBench(const BenchFlags& f, std::ostream& out) {
  if (f.sizes.size() < 3) {
    throw UsageError("--sizes needs at least 3 window sizes for a slope fit");
  }
  const std::vector<SweepCost> rows = RunComplexityBench(f.sizes, f.reps);
  std::string csv = "n,method,ops,seconds\n";
  char buf[128];
  for (const SweepCost& row : rows) {
    std::snprintf(buf, sizeof(buf), "%zu,%s,%llu,%.9g\n", row.n,
                  std::string(MeasureName(row.measure)).c_str(),
                  static_cast<unsigned long long>(row.ops), row.seconds);
    csv += buf;
  }
  Emit(f.out, csv, out);
  for (Measure m : kAllMeasures) {
    std::vector<double> n, secs;
    for (const SweepCost& row : rows) {
      if (row.measure != m) continue;
      n.push_back(static_cast<double>(row.n));
      secs.push_back(std::max(row.seconds, 1e-12));
    }
    std::snprintf(buf, sizeof(buf), "slope %s ops=%.4f seconds=%.4f\n",
                  std::string(MeasureName(m)).c_str(), OpsSlope(rows, m),
                  LogLogSlope(n, secs));
    out << buf;
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Time-domain pitch tracking with ASMDF, AMDF and autocorrelation",
               "asmdf-pitch"};
  app.require_subcommand(1);

  SynthFlags synth;
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic test WAV");
  synth_cmd->add_option("--preset", synth.preset, "exp1 or exp2")
      ->check(CLI::IsMember({"exp1", "exp2"}));
  synth_cmd->add_option("--sine", synth.sines, "Sine FREQ[:AMP[:PHASE]]");
  synth_cmd->add_option("--cosine", synth.cosines, "Cosine FREQ[:AMP[:PHASE]]");
  synth_cmd->add_option("--rate", synth.rate, "Sample rate (Hz)")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--length", synth.length, "Samples (default rate+1)");
  synth_cmd->add_option("--noise", synth.noise, "White noise std")
      ->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--seed", synth.seed, "Noise seed");
  synth_cmd->add_option("--out", synth.out, "Output WAV")->required();

  TrackFlags track;
  auto* track_cmd = app.add_subcommand("track", "Pitch contour of a WAV");
  AddTrackingFlags(track_cmd, track);
  track_cmd->add_option("--method", track.method, "asmdf, amdf or autocorr")
      ->check(CLI::IsMember({"asmdf", "amdf", "autocorr"}));

  TrackFlags compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "Contours of all three methods");
  AddTrackingFlags(compare_cmd, compare);

  EvalFlags eval;
  auto* eval_cmd = app.add_subcommand("eval", "Score a contour against truth");
  eval_cmd->add_option("--truth", eval.truth, "Reference contour CSV")
      ->required();
  eval_cmd->add_option("--est", eval.est, "Estimated contour CSV")->required();
  eval_cmd->add_option("--out", eval.out, "Also write the report here");

  CurveFlags curve;
  auto* curve_cmd = app.add_subcommand("curve", "Lag curves of one frame");
  curve_cmd->add_option("--in", curve.in, "Input WAV")->required();
  curve_cmd->add_option("--frame-index", curve.frame_index, "0-based frame")
      ->required();
  curve_cmd->add_option("--window", curve.window, "Window length in samples")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
  curve_cmd->add_option("--hop", curve.hop, "Hop in samples")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 30));
  curve_cmd->add_option("--kmin", curve.kmin, "First lag")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 30));
  curve_cmd->add_option("--kmax", curve.kmax, "Last lag");
  curve_cmd->add_option("--out", curve.out, "Output CSV (default: stdout)");

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Lag-sweep cost versus n");
  bench_cmd->add_option("--sizes", bench.sizes, "Window sizes, e.g. 256,512")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("--reps", bench.reps, "Timed repetitions per size")
      ->check(CLI::Range(1, 1000000));
  bench_cmd->add_option("--out", bench.out, "Output CSV (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (synth_cmd->parsed()) return DoSynth(synth, out);
    if (track_cmd->parsed()) return DoTrack(track, out);
    if (compare_cmd->parsed()) return DoCompare(compare, out);
    if (eval_cmd->parsed()) return DoEval(eval, out);
    if (curve_cmd->parsed()) return DoCurve(curve, out);
    if (bench_cmd->parsed()) return DoBench(bench, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const AlignmentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitAlignment;
  } catch (const InsufficientDataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitAlignment;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command given\n";
  return kExitUsage;
}

}  // namespace asmdf::cli
