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

#include "gsrp/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "fft.hpp"
#include "gsrp/srp.hpp"
#include "gsrp/wav.hpp"

namespace gsrp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Independent, reproducible stream per (seed, purpose, channel).
std::mt19937_64 make_stream(std::uint64_t seed, std::uint32_t purpose, std::uint32_t channel) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), purpose, channel};
  return std::mt19937_64(seq);
}

constexpr std::uint32_t kSourceStream = 1;
constexpr std::uint32_t kNoiseStream = 2;

std::vector<double> gaussian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<double> out(n);
  for (auto& v : out) v = dist(rng);
  return out;
}

std::vector<double> source_waveform(const SceneSpec& spec, std::size_t lead, std::size_t length) {
  const std::size_t n = lead + length;
  switch (spec.source.kind) {
    case SourceSignalKind::white_noise: {
      auto rng = make_stream(spec.seed, kSourceStream, 0);
      return gaussian(rng, n);
    }
    case SourceSignalKind::tone: {
      std::vector<double> out(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double t = (static_cast<double>(i) - static_cast<double>(lead)) / spec.sample_rate;
        out[i] = std::sin(kTwoPi * spec.source.tone_hz * t);
      }
      return out;
    }
    case SourceSignalKind::file: {
      const MultichannelAudio file = read_wav(spec.source.file);
      if (file.num_channels() != 1) throw ConfigError("source file must be mono");
      if (std::abs(file.sample_rate - spec.sample_rate) > 1e-9)
        throw ConfigError("source file sample rate differs from the scene sample rate");
      if (file.num_samples() == 0) throw ConfigError("source file is empty");
      std::vector<double> out(n, 0.0);
      // Looped to the segment length.
      for (std::size_t i = 0; i < length; ++i) out[lead + i] = file.channels[0][i % file.num_samples()];
      return out;
    }
  }
  return {};
}

double total_power(const MultichannelAudio& a, std::size_t first, std::size_t last) {
  double acc = 0.0;
  for (const auto& ch : a.channels)
    for (std::size_t i = first; i < last; ++i) acc += ch[i] * ch[i];
  return acc;
}

double channel_power(const std::vector<double>& ch, std::size_t first, std::size_t last) {
  double acc = 0.0;
  for (std::size_t i = first; i < last; ++i) acc += ch[i] * ch[i];
  return acc;
}

}  // namespace

NoiseField constant_noise_field(HermitianMatrix target) {
  return {[t = std::move(target)](double) { return t; }, true};
}

NoiseField diffuse_noise_field(const ArrayGeometry& geom, std::size_t num_directions, double sensor_floor,
                               bool cardioid, bool spherical) {
  if (num_directions == 0) throw ConfigError("diffuse field needs at least one direction");
  if (sensor_floor < 0.0) throw ConfigError("sensor floor must be non-negative");
  if (cardioid && !geom.mic_orientations) throw ConfigError("cardioid noise field needs mic orientations");
  std::vector<Vec3> dirs;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t q = 0; q < num_directions; ++q) {
    const double fq = static_cast<double>(q);
    if (spherical) {
      const double z = 1.0 - (2.0 * fq + 1.0) / static_cast<double>(num_directions);
      const double rho = std::sqrt(1.0 - z * z);
      dirs.push_back({rho * std::cos(golden * fq), rho * std::sin(golden * fq), z});
    } else {
      const double a = kTwoPi * fq / static_cast<double>(num_directions);
      dirs.push_back({std::cos(a), std::sin(a), 0.0});
    }
  }
  const Vec3 center = geom.center();
  return {[geom, dirs, sensor_floor, cardioid, center](double freq_hz) {
            const std::size_t m = geom.size();
            HermitianMatrix acc(m);
            ComplexVector h(m);
            for (const auto& u : dirs) {
              for (std::size_t i = 0; i < m; ++i) {
                // Plane wave arriving from direction u: mics further along u hear it earlier.
                const double lead = u.dot(geom.mic_positions[i] - center) / geom.speed_of_sound;
                const double g = cardioid ? cardioid_gain((*geom.mic_orientations)[i], u) : 1.0;
                h[i] = std::polar(g, kTwoPi * freq_hz * lead);
              }
              acc += outer_product(h);
            }
            acc *= 1.0 / static_cast<double>(dirs.size());
            acc = acc.plus_identity(sensor_floor);
            const double mean_diag = average_power(acc);
            return mean_diag > 0.0 ? acc * (1.0 / mean_diag) : acc;
          },
          false};
}

NoiseField pink_tilt(NoiseField base, double corner_hz) {
  if (!(corner_hz > 0.0)) throw ConfigError("pink tilt corner frequency must be positive");
  if (!base.at) throw ConfigError("pink tilt needs a base field");
  return {[at = std::move(base.at), corner_hz](double freq_hz) {
            return at(freq_hz) * (corner_hz / std::max(freq_hz, corner_hz));
          },
          false};
}

std::size_t SceneSpec::noise_only_samples() const {
  return static_cast<std::size_t>(std::llround(noise_only_s * sample_rate));
}

std::size_t SceneSpec::source_samples() const {
  return static_cast<std::size_t>(std::llround(source_s * sample_rate));
}

void SceneSpec::validate() const {
  geometry.validate();
  if (!(sample_rate > 0.0)) throw ConfigError("scene sample rate must be positive");
  if (noise_only_s < 0.0 || !(source_s > 0.0)) throw ConfigError("scene durations must be positive");
  if (noise.kind == NoiseKind::shaped && !noise.field.at) throw ConfigError("shaped noise needs a noise field");
  if (noise.kind != NoiseKind::none && noise.snr_db && std::isnan(*noise.snr_db))
    throw ConfigError("SNR must be a number");
  if (cardioid_mics && !geometry.mic_orientations) throw ConfigError("cardioid mics need orientations");
  if (source.rolloff_hz && !(*source.rolloff_hz > 0.0)) throw ConfigError("source roll-off must be positive");
  if (source.gains && source.gains->size() != geometry.size())
    throw ConfigError("source gain count differs from mic count");
}

MultichannelAudio render_source(const SceneSpec& spec) {
  spec.validate();
  const auto& geom = spec.geometry;
  const std::size_t lead_samples = spec.noise_only_samples();
  const std::size_t length = spec.source_samples();

  std::vector<double> radii(geom.size());
  for (std::size_t m = 0; m < geom.size(); ++m) {
    radii[m] = distance(spec.source.position, geom.mic_positions[m]);
    if (radii[m] < spec.source.r_min)
      throw ConfigError("source lies within r_min of microphone " + std::to_string(m));
  }
  std::vector<double> gains(geom.size(), 1.0);
  if (spec.source.gains) {
    gains = *spec.source.gains;
  } else if (spec.cardioid_mics) {
    gains = cardioid_gains(geom, spec.source.position);
  }

  // Render with `pad` extra samples on both sides so circular delays never
  // wrap into the kept segment.
  const double max_delay = *std::max_element(radii.begin(), radii.end()) / geom.speed_of_sound;
  const auto pad = static_cast<std::size_t>(std::ceil(max_delay * spec.sample_rate)) + 64;
  const std::vector<double> s = source_waveform(spec, pad, length);
  std::size_t nfft = length + 2 * pad;
  if (nfft % 2 == 0) ++nfft;  // no Nyquist bin
  std::vector<double> buf(nfft, 0.0);
  std::copy(s.begin(), s.end(), buf.begin());

  detail::RealFft fft(nfft);
  std::vector<Complex> spectrum(fft.num_bins());
  fft.forward(buf, spectrum);

  MultichannelAudio out;
  out.sample_rate = spec.sample_rate;
  out.channels.assign(geom.size(), std::vector<double>(lead_samples + length, 0.0));
  std::vector<Complex> shaped(fft.num_bins());
  std::vector<double> time(nfft);
  for (std::size_t m = 0; m < geom.size(); ++m) {
    const double amp = gains[m] / (4.0 * std::numbers::pi * radii[m]);
    const double tau = radii[m] / geom.speed_of_sound;
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
      const double f = static_cast<double>(k) * spec.sample_rate / static_cast<double>(nfft);
      const double tilt = spec.source.rolloff_hz ? 1.0 / std::hypot(1.0, f / *spec.source.rolloff_hz) : 1.0;
      shaped[k] = spectrum[k] * std::polar(amp * tilt, -kTwoPi * f * tau);
    }
    fft.inverse(shaped, time);
    const double norm = 1.0 / static_cast<double>(nfft);
    for (std::size_t i = 0; i < length; ++i) out.channels[m][lead_samples + i] = time[pad + i] * norm;
  }
  return out;
}

MultichannelAudio render_noise(const SceneSpec& spec, std::size_t num_samples) {
  spec.validate();
  const std::size_t m_count = spec.geometry.size();
  MultichannelAudio out;
  out.sample_rate = spec.sample_rate;
  out.channels.resize(m_count);
  for (std::size_t m = 0; m < m_count; ++m) {
    auto rng = make_stream(spec.seed, kNoiseStream, static_cast<std::uint32_t>(m));
    out.channels[m] = gaussian(rng, num_samples);
  }
  if (spec.noise.kind != NoiseKind::shaped || num_samples == 0) return out;

  // Color the white channels bin by bin: y(f) = L(f) x(f) with L L^H = target(f).
  detail::RealFft fft(num_samples);
  std::vector<std::vector<Complex>> spectra(m_count, std::vector<Complex>(fft.num_bins()));
  for (std::size_t m = 0; m < m_count; ++m) fft.forward(out.channels[m], spectra[m]);

  const auto factor = [&](double f) {
    HermitianMatrix target = spec.noise.field.at(f);
    if (target.dim() != m_count) throw DimensionMismatch("noise field size differs from mic count");
    // Tiny relative jitter keeps rank-deficient fields factorizable.
    return cholesky(target.plus_identity(1e-12 * std::max(average_power(target), 1e-300)));
  };
  std::optional<ComplexMatrix> fixed;
  if (spec.noise.field.frequency_independent) fixed = factor(0.0);
  ComplexVector x(m_count);
  for (std::size_t k = 0; k < fft.num_bins(); ++k) {
    const ComplexMatrix l =
        fixed ? *fixed : factor(static_cast<double>(k) * spec.sample_rate / static_cast<double>(num_samples));
    for (std::size_t m = 0; m < m_count; ++m) x[m] = spectra[m][k];
    const ComplexVector y = l * x;
    for (std::size_t m = 0; m < m_count; ++m) spectra[m][k] = y[m];
  }
  const double norm = 1.0 / static_cast<double>(num_samples);
  for (std::size_t m = 0; m < m_count; ++m) {
    fft.inverse(spectra[m], out.channels[m]);
    for (auto& v : out.channels[m]) v *= norm;
  }
  return out;
}

MixResult mix_at_snr(const MultichannelAudio& clean, const MultichannelAudio& noise,
                     std::optional<double> snr_db, std::size_t first, std::size_t last) {
  if (clean.num_channels() != noise.num_channels() || clean.num_samples() != noise.num_samples())
    throw DimensionMismatch("clean and noise signals differ in shape");
  MixResult result{clean, 0.0};
  if (!snr_db || std::isinf(*snr_db)) return result;
  last = std::min(last, clean.num_samples());
  if (first >= last) throw ConfigError("empty SNR measurement range");
  const double px = total_power(clean, first, last);
  const double pv = total_power(noise, first, last);
  if (!(px > 0.0) || !(pv > 0.0)) throw ConfigError("SNR mixing needs nonzero clean and noise power");
  result.noise_gain = std::sqrt(px / (pv * std::pow(10.0, *snr_db / 10.0)));
  for (std::size_t m = 0; m < clean.num_channels(); ++m)
    for (std::size_t i = 0; i < clean.num_samples(); ++i)
      result.mixed.channels[m][i] += result.noise_gain * noise.channels[m][i];
  return result;
}

SceneOutput simulate(const SceneSpec& spec) {
  spec.validate();
  SceneOutput out;
  out.clean = render_source(spec);
  out.source_position = spec.source.position;
  out.source_azimuth_deg = azimuth_of(spec.source.position, spec.geometry.center());
  out.noise_only_samples = spec.noise_only_samples();
  const std::size_t n = out.clean.num_samples();
  const std::size_t first = out.noise_only_samples;
  out.snr_db_average = out.snr_db_closest = std::numeric_limits<double>::infinity();

  if (spec.noise.kind == NoiseKind::none) {
    out.samples = out.clean;
    return out;
  }
  const MultichannelAudio noise = render_noise(spec, n);
  MixResult mix = mix_at_snr(out.clean, noise, spec.noise.snr_db, first, n);
  if (!spec.noise.snr_db) {
    mix.noise_gain = 1.0;
    for (std::size_t m = 0; m < noise.num_channels(); ++m)
      for (std::size_t i = 0; i < n; ++i) mix.mixed.channels[m][i] += noise.channels[m][i];
  }
  out.samples = std::move(mix.mixed);
  out.noise_gain = mix.noise_gain;

  const double g2 = mix.noise_gain * mix.noise_gain;
  out.snr_db_average = 10.0 * std::log10(total_power(out.clean, first, n) / (g2 * total_power(noise, first, n)));
  std::size_t closest = 0;
  for (std::size_t m = 1; m < spec.geometry.size(); ++m)
    if (distance(spec.source.position, spec.geometry.mic_positions[m]) <
        distance(spec.source.position, spec.geometry.mic_positions[closest]))
      closest = m;
  out.snr_db_closest = 10.0 * std::log10(channel_power(out.clean.channels[closest], first, n) /
                                         (g2 * channel_power(noise.channels[closest], first, n)));
  return out;
}

}  // namespace gsrp
