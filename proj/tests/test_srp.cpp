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
#include <limits>

#include "gsrp/srp.hpp"
#include "test_util.hpp"

using namespace gsrp;
using namespace gsrp::test;

namespace {

ArrayGeometry square() {
  ArrayGeometry g;
  g.mic_positions = {{-1, -1, 0}, {1, -1, 0}, {1, 1, 0}, {-1, 1, 0}};
  return g;
}

StftParams small_stft() {
  StftParams p;
  p.frame_size = 64;
  p.frame_shift = 32;
  return p;
}

}  // namespace

TEST_SUITE("srp") {
  TEST_CASE("planar grid is row-major with x fastest") {
    const auto g = CandidateGrid::planar(-1.0, 1.0, 0.0, 0.5, 0.2, 0.5);
    CHECK(g.nx() == 5);
    CHECK(g.ny() == 2);
    CHECK(g.point(1).x == doctest::Approx(-0.5));
    CHECK(g.point(5).y == doctest::Approx(0.5));
    CHECK(g.point(5).z == doctest::Approx(0.2));
    CHECK(g.index_of(3, 1) == 8);
    CHECK(g.cell_of(8) == std::pair<std::size_t, std::size_t>{3, 1});
    CHECK(g.nearest({0.1, 0.4, 0.0}) == 7);
    CHECK_THROWS_AS(CandidateGrid::planar(1.0, -1.0, 0.0, 1.0, 0.0, 0.1), ConfigError);
  }

  TEST_CASE("azimuth grid") {
    const auto g = CandidateGrid::azimuth(90.0, {1.0, 0.0, 0.0}, 2.0);
    REQUIRE(g.size() == 4);
    CHECK(g.azimuth_deg(1) == doctest::Approx(90.0));
    CHECK(g.point(1).x == doctest::Approx(1.0));
    CHECK(g.point(1).y == doctest::Approx(2.0));
    CHECK(g.nearest_azimuth(350.0) == 0);
    CHECK(azimuth_of({0.0, -1.0, 0.0}, {}) == doctest::Approx(270.0));
  }

  TEST_CASE("argmax tie-break, NaN handling, averaging") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK(argmax({{1.0, 3.0, 3.0, 2.0}, 0}).index == 1);
    CHECK(argmax({{nan, 0.5, nan}, 0}).index == 1);
    CHECK(argmax({{7.0, 7.0, 7.0}, 0}).index == 0);
    CHECK_THROWS_AS(argmax({{nan, nan}, 0}), NumericalError);
    const std::vector<SrpMap> maps{{{1.0, 2.0}, 0}, {{3.0, 6.0}, 1}};
    CHECK(average_maps(maps).values == std::vector<double>{2.0, 4.0});
  }

  TEST_CASE("engine map equals the per-bin sum of beamformer PSDs") {
    Rng rng(40);
    const auto stft = small_stft();
    const FreeFieldModel model(square(), PropagationKind::near_field);
    const auto grid = CandidateGrid::planar(-1.5, 1.5, -1.5, 1.5, 0.0, 0.5);
    std::vector<HermitianMatrix> scm, ncm;
    for (std::size_t k = 0; k < stft.num_bins(); ++k) {
      scm.push_back(random_pd(4, rng));
      ncm.push_back(random_pd(4, rng));
    }
    const SrpOptions opt{BeamformerKind::mvcnr, WeightingKind::frob, {500.0, 4000.0}, 0.01};
    const SrpEngine engine(model, grid, stft, opt);
    const auto map = engine.compute(scm, &ncm);
    for (std::size_t p = 0; p < grid.size(); p += 7) {
      double ref = 0.0;
      for (std::size_t k = 0; k < stft.num_bins(); ++k) {
        const double f = bin_frequency(k, stft);
        if (f < 500.0 || f > 4000.0) continue;
        const double sy2 = average_power(scm[k]);
        const auto reg = regularize_ncm(ncm[k], sy2, 0.01);
        const auto d = steer_near_field(square(), grid.point(p), f, 0.05).values;
        ref += zeta2_frob(average_power(reg), scm[k]) * mvcnr_psd(d, scm[k], hermitian_inverse(reg));
      }
      CHECK(map.values[p] == doctest::Approx(ref).epsilon(1e-11));
    }
  }

  TEST_CASE("configuration errors") {
    const auto stft = small_stft();
    const FreeFieldModel model(square(), PropagationKind::far_field);
    const auto grid = CandidateGrid::azimuth(10.0, {}, 5.0);
    CHECK_THROWS_AS(SrpEngine(model, grid, stft, {BeamformerKind::mvcnr, WeightingKind::phat, {}, 0.01}),
                    ConfigError);
    const SrpEngine needs_ncm(model, grid, stft, {BeamformerKind::mvdr, WeightingKind::none, {}, 0.01});
    const std::vector<HermitianMatrix> scm(stft.num_bins(), HermitianMatrix::identity(4));
    CHECK_THROWS_AS(needs_ncm.compute(scm, nullptr), ConfigError);
    const std::vector<HermitianMatrix> wrong(stft.num_bins(), HermitianMatrix::identity(3));
    CHECK_THROWS_AS(needs_ncm.compute(wrong, &scm), DimensionMismatch);
  }

  TEST_CASE("null steering points get zero") {
    ArrayGeometry g;
    g.mic_positions = {{0, 0, 0}, {0.05, 0, 0}};
    g.mic_orientations = std::vector<Vec3>{{1, 0, 0}, {1, 0, 0}};
    const FreeFieldModel model(g, PropagationKind::far_field, 0.05, true);
    const auto grid = CandidateGrid::azimuth(90.0, {}, 5.0);  // 180 degrees is behind both mics
    const auto stft = small_stft();
    const SrpEngine engine(model, grid, stft, {BeamformerKind::nmf, WeightingKind::none, {}, 0.01});
    CHECK(engine.null_steering_count() == engine.active_bins().size());
    const std::vector<HermitianMatrix> scm(stft.num_bins(), HermitianMatrix::identity(2));
    const auto map = engine.compute(scm, nullptr);
    CHECK(map.values[2] == 0.0);
    CHECK(map.values[0] > 0.0);
  }

  TEST_CASE("noise-only statistics give a flat map and the first candidate") {
    Rng rng(41);
    const auto stft = small_stft();
    const FreeFieldModel model(square(), PropagationKind::near_field);
    const auto grid = CandidateGrid::planar(-1.5, 1.5, -1.5, 1.5, 0.0, 0.25);
    std::vector<HermitianMatrix> ncm;
    for (std::size_t k = 0; k < stft.num_bins(); ++k) ncm.push_back(random_pd(4, rng));
    const auto map = SrpEngine(model, grid, stft, {BeamformerKind::mvcnr, WeightingKind::none, {}, 0.0})
                         .compute(ncm, &ncm);
    const auto [lo, hi] = std::minmax_element(map.values.begin(), map.values.end());
    CHECK((*hi - *lo) / *hi < 1e-12);
    // Rounding decides between equal values; quantizing restores the tie.
    SrpMap q = map;
    for (auto& v : q.values) v = std::round(v * 1e6) / 1e6;
    CHECK(argmax(q).index == 0);
  }
}
