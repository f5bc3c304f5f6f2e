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

// Free-field scene synthesis: one point source rendered with exact
// (frequency-domain) fractional delays and 1/(4 pi r) attenuation, plus
// spatially white or covariance-shaped sensor noise mixed at a given SNR.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "gsrp/acoustic_models.hpp"
#include "gsrp/numerics.hpp"
#include "gsrp/stft.hpp"

namespace gsrp {

enum class SourceSignalKind { white_noise, tone, file };
enum class NoiseKind { none, spatially_white, shaped };

// Target per-sample noise covariance as a function of frequency. For a
// frequency-independent target the rendered noise has exactly this
// time-domain covariance.
struct NoiseField {
  std::function<HermitianMatrix(double freq_hz)> at;
  bool frequency_independent = false;
};

NoiseField constant_noise_field(HermitianMatrix target);

// Synthetic diffuse-like field: average of far-field plane-wave outer products
// from `num_directions` directions (including cardioid gains when `cardioid`
// is set), plus sensor_floor·I. Directions are evenly spaced azimuths in the
// horizontal plane, or a Fibonacci lattice on the sphere when `spherical`.
// Normalized so the average diagonal entry is 1.
NoiseField diffuse_noise_field(const ArrayGeometry& geom, std::size_t num_directions,
                               double sensor_floor, bool cardioid, bool spherical = false);

// Scales a field's power spectrum by corner_hz / f above corner_hz (flat
// below), giving a pink-like spectrum with the same spatial coherence.
NoiseField pink_tilt(NoiseField base, double corner_hz);

struct SourceSpec {
  Vec3 position;
  SourceSignalKind kind = SourceSignalKind::white_noise;
  double tone_hz = 1000.0;
  std::string file;                          // mono WAV for SourceSignalKind::file
  std::optional<std::vector<double>> gains;  // explicit per-mic gains, overrides cardioid
  double r_min = 0.05;                       // minimum allowed source-to-mic distance
  // First-order spectral roll-off (-6 dB/octave above this frequency), a
  // rough stand-in for the long-term speech spectrum. nullopt: flat.
  std::optional<double> rolloff_hz;
};

struct NoiseSpec {
  NoiseKind kind = NoiseKind::none;
  NoiseField field;             // used when kind == shaped
  std::optional<double> snr_db; // nullopt: noise is added unscaled
};

struct SceneSpec {
  ArrayGeometry geometry;
  SourceSpec source;
  NoiseSpec noise;
  bool cardioid_mics = false;  // apply mic orientations as cardioid gains
  double noise_only_s = 3.0;
  double source_s = 3.0;
  double sample_rate = 16000.0;
  std::uint64_t seed = 1;

  std::size_t noise_only_samples() const;
  std::size_t source_samples() const;
  void validate() const;
};

struct SceneOutput {
  MultichannelAudio samples;
  MultichannelAudio clean;
  Vec3 source_position;
  double source_azimuth_deg = 0.0;  // seen from the array center
  std::size_t noise_only_samples = 0;
  double snr_db_average = 0.0;      // microphone-averaged, over the source segment
  double snr_db_closest = 0.0;      // at the mic closest to the source
  double noise_gain = 0.0;
};

// Clean microphone signals for the whole scene; silent during the
// noise-only segment.
MultichannelAudio render_source(const SceneSpec& spec);

MultichannelAudio render_noise(const SceneSpec& spec, std::size_t num_samples);

struct MixResult {
  MultichannelAudio mixed;
  double noise_gain = 0.0;
};

// Scales noise so that total clean power over total noise power within
// samples [first, last) equals snr_db. nullopt or +inf: returns clean only.
MixResult mix_at_snr(const MultichannelAudio& clean, const MultichannelAudio& noise,
                     std::optional<double> snr_db, std::size_t first = 0,
                     std::size_t last = static_cast<std::size_t>(-1));

SceneOutput simulate(const SceneSpec& spec);

}  // namespace gsrp
