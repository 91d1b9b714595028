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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "asmdf/csv.h"

namespace asmdf::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("asmdf_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::Run(args, out_, err_);
  }
  std::string P(const std::string& name) const { return (dir_ / name).string(); }

  static std::size_t Lines(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, SynthAndTrackExp1) {
  ASSERT_EQ(Call({"synth", "--preset", "exp1", "--out", P("a.wav")}), kExitOk);
  ASSERT_EQ(Call({"track", "--in", P("a.wav"), "--out", P("a.csv")}), kExitOk);
  const PitchContour c = ReadContourCsv(P("a.csv"));
  ASSERT_EQ(c.size(), 193u);
  for (const auto& e : c.entries) EXPECT_EQ(e.pitch_hz, 200.0);

  ASSERT_EQ(Call({"track", "--in", P("a.wav"), "--method", "autocorr"}), kExitOk);
  EXPECT_EQ(Lines(out_.str()), 194u);
}

TEST_F(CliTest, CompareExp2FirstDip) {
  ASSERT_EQ(Call({"synth", "--preset", "exp2", "--out", P("b.wav")}), kExitOk);
  ASSERT_EQ(Call({"compare", "--in", P("b.wav"), "--picker", "dip1",
                  "--fmax", "2700", "--min-lag", "2"}),
            kExitOk);
  std::istringstream lines(out_.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "time_ms,asmdf_hz,amdf_hz,autocorr_hz");
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string x; std::getline(ss, x, ',');) f.push_back(x);
    ASSERT_EQ(f.size(), 4u);
    EXPECT_EQ(f[1], "250");
    EXPECT_EQ(f[3], "250");
  }
  EXPECT_EQ(rows, 93u);
}

TEST_F(CliTest, CustomSynthAndCurve) {
  ASSERT_EQ(Call({"synth", "--sine", "100:0.5", "--cosine", "300:0.2:0.1",
                  "--rate", "8000", "--length", "4000", "--noise", "0.01",
                  "--seed", "3", "--out", P("c.wav")}),
            kExitOk);
  ASSERT_EQ(Call({"curve", "--in", P("c.wav"), "--frame-index", "2",
                  "--kmax", "120"}),
            kExitOk);
  EXPECT_EQ(out_.str().rfind("k,asmdf,amdf,autocorr\n", 0), 0u);
  EXPECT_EQ(Lines(out_.str()), 1u + 119u);
}

TEST_F(CliTest, EvalWritesReport) {
  {
    std::ofstream(P("t.csv")) << "time_ms,pitch_hz\n0.000,100\n5.000,200\n10.000,150\n";
    std::ofstream(P("e.csv")) << "time_ms,pitch_hz\n0.000,90\n5.000,220\n10.000,unvoiced\n";
  }
  ASSERT_EQ(Call({"eval", "--truth", P("t.csv"), "--est", P("e.csv"), "--out",
                  P("r.csv")}),
            kExitOk);
  EXPECT_NE(out_.str().find("length,2\n"), std::string::npos);
  EXPECT_TRUE(fs::exists(P("r.csv")));
}

TEST_F(CliTest, EvalExitCodes) {
  {
    std::ofstream(P("t.csv")) << "time_ms,pitch_hz\n0.000,100\n5.000,200\n";
    std::ofstream(P("far.csv")) << "time_ms,pitch_hz\n0.000,100\n50.000,200\n";
    std::ofstream(P("one.csv")) << "time_ms,pitch_hz\n0.000,100\n5.000,unvoiced\n";
    std::ofstream(P("bad.csv")) << "time_ms,pitch_hz\n0.000,x\n";
  }
  EXPECT_EQ(Call({"eval", "--truth", P("t.csv"), "--est", P("far.csv")}),
            kExitAlignment);
  EXPECT_EQ(Call({"eval", "--truth", P("t.csv"), "--est", P("one.csv")}),
            kExitAlignment);
  EXPECT_EQ(Call({"eval", "--truth", P("t.csv"), "--est", P("bad.csv")}), kExitIo);
  EXPECT_NE(err_.str().find("2"), std::string::npos);
  EXPECT_EQ(Call({"eval", "--truth", P("t.csv"), "--est", P("missing.csv")}),
            kExitIo);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Call({}), kExitUsage);
  EXPECT_EQ(Call({"frobnicate"}), kExitUsage);
  EXPECT_EQ(Call({"track"}), kExitUsage);
  ASSERT_EQ(Call({"synth", "--preset", "exp2", "--out", P("b.wav")}), kExitOk);
  EXPECT_EQ(Call({"track", "--in", P("b.wav"), "--picker", "median"}), kExitUsage);
  EXPECT_EQ(Call({"track", "--in", P("b.wav"), "--alpha", "0"}), kExitUsage);
  EXPECT_EQ(Call({"track", "--in", P("b.wav"), "--fmax", "4000"}), kExitUsage);
  EXPECT_EQ(Call({"curve", "--in", P("b.wav"), "--frame-index", "100"}),
            kExitUsage);
  EXPECT_EQ(Call({"curve", "--in", P("b.wav"), "--kmax", "199"}), kExitUsage);
  EXPECT_EQ(Call({"synth", "--sine", "200", "--rate", "100", "--out", P("x.wav")}),
            kExitUsage);
  EXPECT_EQ(Call({"bench", "--sizes", "64,128"}), kExitUsage);
  EXPECT_EQ(Call({"--help"}), kExitOk);
}

TEST_F(CliTest, IoErrors) {
  EXPECT_EQ(Call({"track", "--in", P("nope.wav")}), kExitIo);
  EXPECT_EQ(Call({"track", "--in", std::string(ASMDF_TEST_DATA_DIR) + "/pcm8.wav"}),
            kExitIo);
}

TEST_F(CliTest, Bench) {
  ASSERT_EQ(Call({"bench", "--sizes", "128,256,512", "--reps", "1"}), kExitOk);
  const std::string s = out_.str();
  EXPECT_EQ(s.rfind("n,method,ops,seconds\n", 0), 0u);
  EXPECT_NE(s.find("slope asmdf ops=2.0"), std::string::npos) << s;
}

}  // namespace
}  // namespace asmdf::cli
