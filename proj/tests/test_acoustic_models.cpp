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

#include <filesystem>
#include <fstream>

#include "gsrp/acoustic_models.hpp"
#include "test_util.hpp"

using namespace gsrp;

namespace {

ArrayGeometry pair_geometry() {
  ArrayGeometry g;
  g.mic_positions = {{0.0, 0.0, 0.0}, {0.1, 0.0, 0.0}};
  return g;
}

std::filesystem::path temp_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("gsrp_test_" + name);
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_SUITE("acoustic_models") {
  TEST_CASE("near-field steering matches the reference") {
    const auto d = steer_near_field(pair_geometry(), {0.3, 0.4, 0.0}, 1000.0, 0.05);
    CHECK(std::abs(d.values[0] - Complex(-0.15357354778424093, -0.041778718644136459)) < 1e-14);
    CHECK(std::abs(d.values[1] - Complex(-0.059042566818554409, -0.16785959964120936)) < 1e-14);
  }

  TEST_CASE("near-field distance is clamped at r_min") {
    const auto d = steer_near_field(pair_geometry(), {0.0, 0.0, 0.0}, 500.0, 0.05);
    CHECK(std::abs(d.values[0]) == doctest::Approx(1.0 / (4.0 * 3.141592653589793 * 0.05)));
    CHECK_THROWS_AS(steer_near_field(pair_geometry(), {}, 500.0, 0.0), ConfigError);
  }

  TEST_CASE("far-field steering has unit magnitude") {
    const auto d = steer_far_field(pair_geometry(), {3.0, 4.0, 0.0}, 2000.0);
    for (const auto& v : d.values) CHECK(std::abs(v) == doctest::Approx(1.0));
  }

  TEST_CASE("cardioid pattern") {
    CHECK(cardioid_gain({1, 0, 0}, {5, 0, 0}) == doctest::Approx(1.0));
    CHECK(cardioid_gain({1, 0, 0}, {0, 2, 0}) == doctest::Approx(0.5));
    CHECK(cardioid_gain({1, 0, 0}, {-1, 0, 0}) == doctest::Approx(0.0));
  }

  TEST_CASE("a point in every microphone's null gives a null steering vector") {
    ArrayGeometry g = pair_geometry();
    g.mic_orientations = std::vector<Vec3>{{1, 0, 0}, {1, 0, 0}};
    const auto d = steer_far_field(g, {-10.0, 0.0, 0.0}, 1000.0);
    const auto gains = cardioid_gains(g, {-10.0, 0.0, 0.0});
    CHECK(compose_directivity(d, gains).is_null());
  }

  TEST_CASE("geometry validation") {
    ArrayGeometry g;
    g.mic_positions = {{0, 0, 0}};
    CHECK_THROWS_AS(g.validate(), ConfigError);
    g = pair_geometry();
    g.mic_orientations = std::vector<Vec3>{{1, 0, 0}};
    CHECK_THROWS_AS(g.validate(), ConfigError);
  }

  TEST_CASE("geometry and ATF tables round-trip through CSV") {
    const auto dir = temp_dir("atf");
    ArrayGeometry g = pair_geometry();
    g.mic_orientations = std::vector<Vec3>{{1, 0, 0}, {0, 1, 0}};
    save_geometry(g, dir / "geom.csv");
    const auto back = load_geometry(dir / "geom.csv");
    CHECK(back.mic_positions == g.mic_positions);
    REQUIRE(back.mic_orientations);

    const std::vector<Vec3> pts{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    const std::vector<double> freqs{31.25, 1000.0 / 3.0};
    AtfTable table(g, pts, freqs);
    for (std::size_t p = 0; p < pts.size(); ++p)
      for (std::size_t b = 0; b < freqs.size(); ++b) {
        const auto d = steer_far_field(g, pts[p], freqs[b]).values;
        std::copy(d.begin(), d.end(), table.gains(p, b).begin());
      }
    save_atf_table(table, dir / "atf.csv", dir / "geom.csv");
    const auto loaded = load_atf_table(dir / "atf.csv", dir / "geom.csv");
    CHECK(loaded.points() == pts);
    const auto a = steer_from_table(table, 1, 1), b = steer_from_table(loaded, 1, 1);
    CHECK(a.values == b.values);
    TableModel model(std::make_shared<AtfTable>(loaded));
    const auto g00 = table.gains(0, 0);
    CHECK(model.steer({}, 0, 31.25) == ComplexVector(g00.begin(), g00.end()));
    CHECK_THROWS_AS(model.steer({}, 0, 500.0), ConfigError);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("incomplete ATF tables are rejected") {
    const auto dir = temp_dir("atf_bad");
    save_geometry(pair_geometry(), dir / "geom.csv");
    {
      std::ofstream out(dir / "atf.csv");
      out << "point_index,x,y,z,freq_hz,mic_index,re,im\n0,1,0,0,100,0,1,0\n";
    }
    CHECK_THROWS_AS(load_atf_table(dir / "atf.csv", dir / "geom.csv"), ConfigError);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("scaled model multiplies every element") {
    auto base = std::make_shared<FreeFieldModel>(pair_geometry(), PropagationKind::near_field);
    ScaledModel scaled(base, [](double, std::size_t p) { return Complex(0.0, 2.0 + static_cast<double>(p)); });
    const auto a = base->steer({0.3, 0.4, 0}, 1, 700.0);
    const auto b = scaled.steer({0.3, 0.4, 0}, 1, 700.0);
    for (std::size_t m = 0; m < 2; ++m) CHECK(std::abs(b[m] - a[m] * Complex(0.0, 3.0)) < 1e-15);
  }
}
