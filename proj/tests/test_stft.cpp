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

#include "gsrp/stft.hpp"

using namespace gsrp;

TEST_SUITE("stft") {
  TEST_CASE("periodic Hann window") {
    const auto w = make_window({});
    REQUIRE(w.size() == 512);
    CHECK(w[0] == 0.0);
    CHECK(w[256] == doctest::Approx(1.0));
    CHECK(w[128] == doctest::Approx(0.5));
    CHECK(w[511] == doctest::Approx(w[1]));  // periodic, not symmetric
  }

  TEST_CASE("frame count drops the trailing partial frame") {
    const StftParams p;
    CHECK(frame_count(1024, p) == 3);
    CHECK(frame_count(1023, p) == 2);
    CHECK(frame_count(511, p) == 0);
    CHECK(frame_count(512, p) == 1);
  }

  TEST_CASE("two-tone spectrum matches the reference") {
    MultichannelAudio a;
    a.channels.assign(2, std::vector<double>(1024));
    for (std::size_t n = 0; n < 1024; ++n) {
      const double t = static_cast<double>(n) / 16000.0;
      a.channels[0][n] = std::sin(2.0 * std::numbers::pi * 1000.0 * t) +
                         0.5 * std::cos(2.0 * std::numbers::pi * 3000.0 * t + 0.3);
      a.channels[1][n] = -a.channels[0][n];
    }
    const auto tiles = analyze(a, {});
    REQUIRE(tiles.num_frames() == 3);
    REQUIRE(tiles.num_bins() == 257);
    const auto y32 = tiles.vector(1, 32);
    CHECK(std::abs(y32[0] - Complex(0.0, -128.0)) < 1e-9);
    CHECK(std::abs(y32[1] + y32[0]) < 1e-12);
    const auto y96 = tiles.vector(1, 96)[0];
    CHECK(std::abs(y96 - Complex(61.141535304040069, 18.91329322632177)) < 1e-9);
    CHECK(std::abs(tiles.vector(1, 10)[0]) < 1e-9);
  }

  TEST_CASE("bin frequencies") {
    const StftParams p;
    CHECK(bin_frequency(0, p) == 0.0);
    CHECK(bin_frequency(256, p) == doctest::Approx(8000.0));
    CHECK(bin_frequency(32, p) == doctest::Approx(1000.0));
  }

  TEST_CASE("invalid parameters") {
    StftParams p;
    p.frame_size = 500;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p.frame_size = 512;
    p.frame_shift = 1024;
    CHECK_THROWS_AS(p.validate(), ConfigError);
  }
}
