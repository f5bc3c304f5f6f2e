// Copyright 2026 The GSRP Authors
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

#pragma once

#include <filesystem>

#include "gsrp/stft.hpp"

namespace gsrp {

// Reads PCM16 or IEEE float32 WAV (any channel count). Samples are scaled to
// [-1, 1) for PCM16.
MultichannelAudio read_wav(const std::filesystem::path& path);

// Writes IEEE float32 WAV with one channel per audio channel.
void write_wav(const MultichannelAudio& audio, const std::filesystem::path& path);

}  // namespace gsrp
