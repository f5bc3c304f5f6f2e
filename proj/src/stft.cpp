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

#include "gsrp/stft.hpp"

#include <numbers>

#include "fft.hpp"

namespace gsrp {

void StftParams::validate() const {
  if (frame_size < 2 || (frame_size & (frame_size - 1)) != 0)
    throw ConfigError("STFT frame size must be a power of two");
  if (frame_shift == 0 || frame_shift > frame_size)
    throw ConfigError("STFT frame shift must be in [1, frame_size]");
  if (!(sample_rate > 0.0)) throw ConfigError("sample rate must be positive");
}

double bin_frequency(std::size_t bin, const StftParams& params) {
  return static_cast<double>(bin) * params.sample_rate / static_cast<double>(params.frame_size);
}

std::vector<double> make_window(const StftParams& params) {
  std::vector<double> w(params.frame_size, 1.0);
  if (params.window == WindowKind::hann) {
    const double n = static_cast<double>(params.frame_size);
    for (std::size_t i = 0; i < w.size(); ++i)
      w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / n);
  }
  return w;
}

MultichannelStft::MultichannelStft(StftParams params, std::size_t channels, std::size_t frames)
    : params_(params),
      channels_(channels),
      frames_(frames),
      tiles_(frames * params.num_bins() * channels) {}

std::span<const Complex> MultichannelStft::vector(std::size_t frame, std::size_t bin) const {
  return {tiles_.data() + (frame * num_bins() + bin) * channels_, channels_};
}

std::span<Complex> MultichannelStft::vector(std::size_t frame, std::size_t bin) {
  return {tiles_.data() + (frame * num_bins() + bin) * channels_, channels_};
}

std::size_t frame_count(std::size_t num_samples, const StftParams& params) {
  if (num_samples < params.frame_size) return 0;
  return (num_samples - params.frame_size) / params.frame_shift + 1;
}

MultichannelStft analyze(const MultichannelAudio& signal, const StftParams& params) {
  params.validate();
  if (signal.num_channels() == 0) throw ConfigError("STFT input has no channels");
  const std::size_t len = signal.num_samples();
  for (const auto& ch : signal.channels)
    if (ch.size() != len) throw ConfigError("STFT input channels differ in length");
  if (len < params.frame_size) throw ConfigError("signal shorter than one STFT frame");

  const std::size_t frames = frame_count(len, params);
  MultichannelStft out(params, signal.num_channels(), frames);
  const auto window = make_window(params);
  detail::RealFft fft(params.frame_size);
  std::vector<double> segment(params.frame_size);
  std::vector<Complex> spectrum(params.num_bins());

  for (std::size_t m = 0; m < signal.num_channels(); ++m) {
    const auto& ch = signal.channels[m];
    for (std::size_t l = 0; l < frames; ++l) {
      const std::size_t start = l * params.frame_shift;
      for (std::size_t i = 0; i < params.frame_size; ++i) segment[i] = ch[start + i] * window[i];
      fft.forward(segment, spectrum);
      for (std::size_t k = 0; k < spectrum.size(); ++k) out.vector(l, k)[m] = spectrum[k];
    }
  }
  return out;
}

}  // namespace gsrp
