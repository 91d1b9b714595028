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

// Minimal RIFF/WAVE support: 16-bit integer PCM, one or two channels.
//
// Decoded samples are value / 32768, so the range is [-1, 1). Stereo is
// downmixed as (left + right) / 2 before normalization. Encoding writes
// mono, rounding x * 32768 to nearest and clamping to [-32768, 32767].

#ifndef ASMDF_WAV_H_
#define ASMDF_WAV_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

#include "asmdf/signal.h"

namespace asmdf {

// UnsupportedFormatError for a non-PCM encoding, a bit depth other than 16
// or a channel count other than 1-2; MalformedFileError for truncated or
// missing chunks.
Signal DecodeWav(std::span<const std::uint8_t> bytes);
Signal ReadWav(const std::filesystem::path& path);

std::string EncodeWav(const Signal& signal);
// Atomic: a temporary file is renamed into place.
void WriteWav(const std::filesystem::path& path, const Signal& signal);

}  // namespace asmdf

#endif  // ASMDF_WAV_H_
