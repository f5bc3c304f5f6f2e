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

#include "gsrp/config.hpp"

using namespace gsrp;

namespace {

const char* kNearfield = R"(gsrp-config 1
# four mics around a centered source
name = nearfield
geometry.mics = -1,-1,0; 1,-1,0; 1,1,0; -1,1,0
scene.source.position = 0, 0, 0
scene.noise_only_s = 0
scene.source_s = 0.2
model.kind = near_field
beamformer.kind = mvcnr
grid.kind = planar
grid.x = -1.5, 1.5
grid.y = -1.5, 1.5
grid.spacing = 0.1
ncm.source = identity
)";

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("parses a complete run configuration") {
    const auto rc = parse_run_config(Config::parse(kNearfield));
    CHECK(rc.name == "nearfield");
    CHECK(rc.geometry.size() == 4);
    REQUIRE(rc.scene);
    CHECK(rc.scene->source_s == 0.2);
    CHECK(rc.model.kind == ModelKind::near_field);
    CHECK(rc.beamformer == BeamformerKind::mvcnr);
    CHECK(rc.ncm_source == NcmSource::identity);
    CHECK(rc.stft.frame_size == 512);
    CHECK(rc.eps_reg == 0.01);
    const auto grid = build_grid(rc);
    CHECK(grid.size() == 31 * 31);
    CHECK(build_model(rc)->num_mics() == 4);
  }

  TEST_CASE("header, syntax and duplicate keys") {
    CHECK_THROWS_AS(Config::parse("name = x\n"), ConfigError);
    CHECK_THROWS_AS(Config::parse("gsrp-config 2\n"), ConfigError);
    CHECK_THROWS_AS(Config::parse("gsrp-config 1\nname x\n"), ConfigError);
    CHECK_THROWS_AS(Config::parse("gsrp-config 1\na = 1\na = 2\n"), ConfigError);
    const auto c = Config::parse("# lead\ngsrp-config 1\n a.b = 3 # trailing\n");
    CHECK(c.get("a.b") == "3");
    CHECK(c.get_double("a.b") == 3.0);
    CHECK_THROWS_AS(c.get("missing"), ConfigError);
  }

  TEST_CASE("unknown keys are rejected") {
    std::string text = kNearfield;
    text += "beamformer.knd = ds\n";
    CHECK_THROWS_AS(parse_run_config(Config::parse(text)), ConfigError);
  }

  TEST_CASE("inconsistent settings are rejected") {
    std::string text = kNearfield;
    text += "weighting.kind = phat\n";
    CHECK_THROWS_AS(parse_run_config(Config::parse(text)), ConfigError);
    std::string bad_band = kNearfield;
    bad_band += "weighting.band = 100, 9000\n";
    CHECK_THROWS_AS(parse_run_config(Config::parse(bad_band)), ConfigError);
    CHECK_THROWS_AS(parse_run_config(Config::parse("gsrp-config 1\ngeometry.mics = 0,0,0; 1,0,0\n")),
                    ConfigError);
  }

  TEST_CASE("relative paths resolve against the config directory") {
    const auto dir = std::filesystem::temp_directory_path() / "gsrp_test_cfg";
    std::filesystem::create_directories(dir);
    {
      std::ofstream out(dir / "run.cfg");
      out << "gsrp-config 1\ninput.wav = data/rec.wav\n";
    }
    const auto c = Config::load(dir / "run.cfg");
    CHECK(c.get_path("input.wav") == dir / "data/rec.wav");
    std::filesystem::remove_all(dir);
  }
}
