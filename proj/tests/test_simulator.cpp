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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gsrp/covariance.hpp"
#include "gsrp/simulator.hpp"
#include "test_util.hpp"

using namespace gsrp;

namespace {

SceneSpec base_scene() {
  SceneSpec s;
  s.geometry.mic_positions = {{0, 0, 0}, {0.2, 0, 0}, {0, 0.2, 0}};
  s.source.position = {1.0, 0.5, 0.0};
  s.noise_only_s = 0.25;
  s.source_s = 0.5;
  s.seed = 5;
  return s;
}

double power(const std::vector<double>& x, std::size_t a, std::size_t b) {
  double p = 0.0;
  for (std::size_t i = a; i < b; ++i) p += x[i] * x[i];
  return p;
}

}  // namespace

TEST_SUITE("simulator") {
  TEST_CASE("tone arrives with 1/(4 pi r) attenuation and the propagation delay") {
    auto s = base_scene();
    s.source.kind = SourceSignalKind::tone;
    s.source.tone_hz = 500.0;
    s.noise_only_s = 0.0;
    const auto clean = render_source(s);
    for (std::size_t m = 0; m < 3; ++m) {
      const double r = distance(s.source.position, s.geometry.mic_positions[m]);
      const double tau = r / s.geometry.speed_of_sound;
      // Compare in the middle of the segment, away from the edges.
      for (std::size_t n = 3000; n < 3010; ++n) {
        const double t = static_cast<double>(n) / s.sample_rate;
        const double expected = std::sin(2.0 * std::numbers::pi * 500.0 * (t - tau)) / (4.0 * std::numbers::pi * r);
        CHECK(clean.channels[m][n] == doctest::Approx(expected).epsilon(1e-3).scale(0.1));
      }
    }
  }

  TEST_CASE("leading segment is silent in the clean signal") {
    const auto out = simulate(base_scene());
    CHECK(out.noise_only_samples == 4000);
    CHECK(power(out.clean.channels[0], 0, 4000) == 0.0);
    CHECK(power(out.clean.channels[0], 4000, 12000) > 0.0);
  }

  TEST_CASE("same seed gives identical signals, another seed does not") {
    auto s = base_scene();
    s.noise.kind = NoiseKind::spatially_white;
    s.noise.snr_db = 5.0;
    const auto a = simulate(s), b = simulate(s);
    CHECK(a.samples.channels == b.samples.channels);
    s.seed = 6;
    CHECK(simulate(s).samples.channels != a.samples.channels);
  }

  TEST_CASE("mixing reaches the requested microphone-averaged SNR") {
    auto s = base_scene();
    s.noise.kind = NoiseKind::spatially_white;
    for (double snr : {-10.0, 0.0, 12.0}) {
      s.noise.snr_db = snr;
      const auto out = simulate(s);
      CHECK(out.snr_db_average == doctest::Approx(snr).epsilon(1e-9));
      double px = 0.0, pv = 0.0;
      for (std::size_t m = 0; m < 3; ++m) {
        px += power(out.clean.channels[m], 4000, 12000);
        std::vector<double> v(out.samples.channels[m]);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= out.clean.channels[m][i];
        pv += power(v, 4000, 12000);
      }
      CHECK(10.0 * std::log10(px / pv) == doctest::Approx(snr).epsilon(1e-9));
    }
  }

  TEST_CASE("shaped noise has the target covariance") {
    auto s = base_scene();
    s.source_s = 2.0;
    HermitianMatrix target = HermitianMatrix::identity(3);
    target.set(0, 1, {0.6, 0.0});
    target.set(1, 2, {-0.3, 0.0});
    s.noise.kind = NoiseKind::shaped;
    s.noise.field = constant_noise_field(target);
    const auto noise = render_noise(s, 32000);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        double c = 0.0;
        for (std::size_t i = 0; i < 32000; ++i) c += noise.channels[a][i] * noise.channels[b][i];
        CHECK(c / 32000.0 == doctest::Approx(target(a, b).real()).epsilon(0.03).scale(1.0));
      }
  }

  TEST_CASE("diffuse field is normalized and positive definite") {
    ArrayGeometry g;
    g.mic_positions = {{0, 0, 0}, {0.05, 0, 0}, {0, 0.05, 0}};
    for (bool spherical : {false, true}) {
      const auto f = diffuse_noise_field(g, 64, 0.01, false, spherical);
      for (double hz : {100.0, 1000.0, 6000.0}) {
        const auto m = f.at(hz);
        CHECK(average_power(m) == doctest::Approx(1.0));
        CHECK_NOTHROW(cholesky(m));
      }
    }
    const auto tilted = pink_tilt(diffuse_noise_field(g, 16, 0.01, false), 100.0);
    CHECK(average_power(tilted.at(50.0)) == doctest::Approx(1.0));
    CHECK(average_power(tilted.at(400.0)) == doctest::Approx(0.25));
  }

  TEST_CASE("invalid scenes") {
    auto s = base_scene();
    s.source.position = {0.01, 0.0, 0.0};
    CHECK_THROWS_AS(render_source(s), ConfigError);
    s = base_scene();
    s.source_s = 0.0;
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s = base_scene();
    s.cardioid_mics = true;
    CHECK_THROWS_AS(s.validate(), ConfigError);
  }
}
