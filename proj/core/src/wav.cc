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

#include "asmdf/wav.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <optional>
#include <string_view>
#include <vector>

#include "asmdf/errors.h"
#include "file_util.h"

namespace asmdf {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr double kPcmScale = 32768.0;

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::size_t pos() const { return pos_; }

  void Need(std::size_t n, std::string_view what) const {
    if (remaining() < n) {
      throw MalformedFileError("truncated WAV: " + std::string(what) +
                               " needs " + std::to_string(n) +
                               " bytes, only " + std::to_string(remaining()) +
                               " left");
    }
  }
  std::string Tag(std::string_view what) {
    Need(4, what);
    std::string tag(reinterpret_cast<const char*>(bytes_.data() + pos_), 4);
    pos_ += 4;
    return tag;
  }
  std::uint16_t U16(std::string_view what) {
    Need(2, what);
    const std::uint16_t v = static_cast<std::uint16_t>(
        bytes_[pos_] | (static_cast<std::uint16_t>(bytes_[pos_ + 1]) << 8));
    pos_ += 2;
    return v;
  }
  std::uint32_t U32(std::string_view what) {
    Need(4, what);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | bytes_[pos_ + i];
    pos_ += 4;
    return v;
  }
  std::span<const std::uint8_t> Take(std::size_t n, std::string_view what) {
    Need(n, what);
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }
  void Skip(std::size_t n) { pos_ += std::min(n, remaining()); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

struct FmtChunk {
  std::uint16_t audio_format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t block_align = 0;
  std::uint16_t bits_per_sample = 0;
};

FmtChunk ParseFmt(std::span<const std::uint8_t> body) {
  if (body.size() < 16) {
    throw MalformedFileError("fmt chunk is " + std::to_string(body.size()) +
                             " bytes, expected at least 16");
  }
  ByteReader r(body);
  FmtChunk fmt;
  fmt.audio_format = r.U16("audio_format");
  fmt.channels = r.U16("channels");
  fmt.sample_rate = r.U32("sample_rate");
  r.U32("byte_rate");
  fmt.block_align = r.U16("block_align");
  fmt.bits_per_sample = r.U16("bits_per_sample");

  if (fmt.audio_format != kFormatPcm) {
    throw UnsupportedFormatError("audio_format " +
                                 std::to_string(fmt.audio_format) +
                                 " is not supported (only PCM = 1)");
  }
  if (fmt.bits_per_sample != 16) {
    throw UnsupportedFormatError("bits_per_sample " +
                                 std::to_string(fmt.bits_per_sample) +
                                 " is not supported (only 16)");
  }
  if (fmt.channels < 1 || fmt.channels > 2) {
    throw UnsupportedFormatError("channels " + std::to_string(fmt.channels) +
                                 " is not supported (only 1 or 2)");
  }
  if (fmt.sample_rate == 0) {
    throw MalformedFileError("sample_rate is 0");
  }
  if (fmt.block_align != fmt.channels * 2) {
    throw MalformedFileError("block_align " + std::to_string(fmt.block_align) +
                             " does not match " +
                             std::to_string(fmt.channels) +
                             " channel(s) of 16-bit samples");
  }
  return fmt;
}

std::int16_t ReadI16(const std::uint8_t* p) {
  return static_cast<std::int16_t>(static_cast<std::uint16_t>(p[0]) |
                                   (static_cast<std::uint16_t>(p[1]) << 8));
}

void PutU16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void PutU32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

}  // namespace

Signal DecodeWav(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  if (r.Tag("RIFF header") != "RIFF") {
    throw MalformedFileError("missing RIFF header");
  }
  r.U32("RIFF size");
  if (r.Tag("WAVE tag") != "WAVE") {
    throw MalformedFileError("RIFF form type is not WAVE");
  }

  std::optional<FmtChunk> fmt;
  std::optional<std::span<const std::uint8_t>> data;
  while (r.remaining() > 0 && !(fmt && data)) {
    const std::string id = r.Tag("chunk id");
    const std::uint32_t size = r.U32("chunk size");
    auto body = r.Take(size, "'" + id + "' chunk");
    if (size % 2 == 1) r.Skip(1);  // pad byte
    if (id == "fmt ") {
      fmt = ParseFmt(body);
    } else if (id == "data") {
      data = body;
    }
  }
  if (!fmt) throw MalformedFileError("no fmt chunk");
  if (!data) throw MalformedFileError("no data chunk");
  if (data->size() % fmt->block_align != 0) {
    throw MalformedFileError("data chunk of " + std::to_string(data->size()) +
                             " bytes is not a whole number of frames");
  }

  const std::size_t frames = data->size() / fmt->block_align;
  std::vector<double> samples(frames);
  const std::uint8_t* p = data->data();
  for (std::size_t i = 0; i < frames; ++i) {
    if (fmt->channels == 1) {
      samples[i] = ReadI16(p) / kPcmScale;
    } else {
      const double mixed = (static_cast<double>(ReadI16(p)) +
                            static_cast<double>(ReadI16(p + 2))) /
                           2.0;
      samples[i] = mixed / kPcmScale;
    }
    p += fmt->block_align;
  }
  if (samples.empty()) throw MalformedFileError("data chunk has no samples");
  return Signal(std::move(samples), static_cast<double>(fmt->sample_rate));
}

Signal ReadWav(const std::filesystem::path& path) {
  const std::string bytes = internal::ReadFileBytes(path);
  return DecodeWav(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

std::string EncodeWav(const Signal& signal) {
  const double rate = signal.sample_rate_hz();
  if (rate != std::floor(rate) || rate > 4294967295.0) {
    throw DomainError("WAV needs an integer sample rate, got " +
                      std::to_string(rate));
  }
  const auto data_bytes = static_cast<std::uint32_t>(signal.size() * 2);
  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  PutU32(out, 36 + data_bytes);
  out += "WAVE";
  out += "fmt ";
  PutU32(out, 16);
  PutU16(out, kFormatPcm);
  PutU16(out, 1);
  PutU32(out, static_cast<std::uint32_t>(rate));
  PutU32(out, static_cast<std::uint32_t>(rate) * 2);
  PutU16(out, 2);
  PutU16(out, 16);
  out += "data";
  PutU32(out, data_bytes);
  for (double v : signal.samples()) {
    const double q = std::clamp(std::round(v * kPcmScale), -32768.0, 32767.0);
    PutU16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }
  return out;
}

void WriteWav(const std::filesystem::path& path, const Signal& signal) {
  internal::WriteFileAtomic(path, EncodeWav(signal));
}

}  // namespace asmdf
