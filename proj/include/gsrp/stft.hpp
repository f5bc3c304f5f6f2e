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

#include <span>

#include "gsrp/types.hpp"

namespace gsrp {

// Real-valued multichannel recording, channel-major.
struct MultichannelAudio {
  double sample_rate = 16000.0;
  std::vector<std::vector<double>> channels;

  std::size_t num_channels() const { return channels.size(); }
  std::size_t num_samples() const { return channels.empty() ? 0 : channels.front().size(); }
};

enum class WindowKind { hann, rectangular };

struct StftParams {
  std::size_t frame_size = 512;
  std::size_t frame_shift = 256;
  WindowKind window = WindowKind::hann;
  double sample_rate = 16000.0;

  std::size_t num_bins() const { return frame_size / 2 + 1; }
  // Throws ConfigError on a non-power-of-two frame or a shift larger than the frame.
  void validate() const;
};

double bin_frequency(std::size_t bin, const StftParams& params);

// Periodic window of length frame_size.
std::vector<double> make_window(const StftParams& params);

// Tiles are laid out frame-major, then bin, then channel, so the M-vector
// y(k, l) is contiguous.
class MultichannelStft {
 public:
  MultichannelStft(StftParams params, std::size_t channels, std::size_t frames);

  const StftParams& params() const { return params_; }
  std::size_t num_channels() const { return channels_; }
  std::size_t num_frames() const { return frames_; }
  std::size_t num_bins() const { return params_.num_bins(); }

  std::span<const Complex> vector(std::size_t frame, std::size_t bin) const;
  std::span<Complex> vector(std::size_t frame, std::size_t bin);

 private:
  StftParams params_;
  std::size_t channels_;
  std::size_t frames_;
  std::vector<Complex> tiles_;
};

// Frames are taken at multiples of frame_shift; a trailing partial frame is
// dropped. No zero padding.
MultichannelStft analyze(const MultichannelAudio& signal, const StftParams& params);

std::size_t frame_count(std::size_t num_samples, const StftParams& params);

}  // namespace gsrp
