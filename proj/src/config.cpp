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

#include "gsrp/config.hpp"

#include <fstream>
#include <sstream>

#include "csv_util.hpp"

namespace gsrp {

namespace {

std::vector<Vec3> parse_points(std::string_view text, const std::string& key) {
  std::vector<Vec3> out;
  for (const auto item : detail::split(text, ';')) {
    if (item.empty()) continue;
    const auto f = detail::split(item, ',');
    if (f.size() != 3) throw ConfigError(key + ": points must be 'x,y,z'");
    out.push_back({detail::parse_double(f[0]), detail::parse_double(f[1]), detail::parse_double(f[2])});
  }
  return out;
}

}  // namespace

Config Config::parse(std::string_view text, const std::filesystem::path& base_dir) {
  Config cfg;
  cfg.base_dir_ = base_dir;
  bool header_seen = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kConfigHeader)
        throw ConfigError("config must start with '" + std::string(kConfigHeader) + "'");
      header_seen = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string value(detail::trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    if (!cfg.entries_.emplace(key, value).second)
      throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
  }
  if (!header_seen) throw ConfigError("config is empty");
  return cfg;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.parent_path());
}

bool Config::has(const std::string& key) const { return entries_.count(key) != 0; }

const std::string& Config::get(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw ConfigError("missing config key '" + key + "'");
  read_.insert(key);
  return it->second;
}

std::string Config::get_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? get(key) : fallback;
}

double Config::get_double(const std::string& key) const {
  try {
    return detail::parse_double(get(key));
  } catch (const ConfigError& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

double Config::get_double_or(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

long long Config::get_int_or(const std::string& key, long long fallback) const {
  if (!has(key)) return fallback;
  try {
    return detail::parse_int(get(key));
  } catch (const ConfigError& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

bool Config::get_bool_or(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const auto& v = get(key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(key + ": expected true/false");
}

std::vector<double> Config::get_doubles(const std::string& key) const {
  std::vector<double> out;
  for (const auto item : detail::split(get(key), ',')) {
    if (item.empty()) continue;
    out.push_back(detail::parse_double(item));
  }
  return out;
}

Vec3 Config::get_point(const std::string& key) const {
  const auto pts = get_points(key);
  if (pts.size() != 1) throw ConfigError(key + ": expected a single 'x,y,z' point");
  return pts.front();
}

std::vector<Vec3> Config::get_points(const std::string& key) const { return parse_points(get(key), key); }

std::filesystem::path Config::get_path(const std::string& key) const {
  std::filesystem::path p = get(key);
  return p.is_relative() && !base_dir_.empty() ? base_dir_ / p : p;
}

void Config::set(const std::string& key, std::string value) { entries_[key] = std::move(value); }

std::vector<std::string> Config::unread_keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_)
    if (!read_.count(k)) out.push_back(k);
  return out;
}

void RunConfig::validate() const {
  geometry.validate();
  stft.validate();
  smoothing.validate();
  band.validate(stft.sample_rate / 2.0);
  if (eps_reg < 0.0) throw ConfigError("ncm.eps_reg must be non-negative");
  if (noise_segment_s < 0.0) throw ConfigError("ncm.noise_segment_s must be non-negative");
  if (!(activity_threshold_db > 0.0)) throw ConfigError("activity.threshold_db must be positive");
  if (weighting == WeightingKind::phat && beamformer != BeamformerKind::ds)
    throw ConfigError("PHAT weighting is only available with the DS beamformer");
  if (scene) {
    scene->validate();
    if (scene->geometry.size() != geometry.size()) throw ConfigError("scene and model mic counts differ");
    if (std::abs(scene->sample_rate - stft.sample_rate) > 1e-9)
      throw ConfigError("scene and STFT sample rates differ");
  } else if (input_wav.empty()) {
    throw ConfigError("config needs either scene.* keys or input.wav");
  }
  if (model.kind == ModelKind::atf_table && grid.kind != GridKind::points)
    throw ConfigError("an ATF table model requires grid.kind = table");
  if (model.directivity && !geometry.mic_orientations)
    throw ConfigError("model.directivity = cardioid needs geometry.orientations");
}

RunConfig parse_run_config(const Config& cfg) {
  RunConfig rc;
  rc.name = cfg.get_or("name", "run");

  // Geometry
  if (cfg.has("geometry.file")) {
    rc.geometry = load_geometry(cfg.get_path("geometry.file"));
  } else {
    rc.geometry.mic_positions = cfg.get_points("geometry.mics");
    if (cfg.has("geometry.orientations")) rc.geometry.mic_orientations = cfg.get_points("geometry.orientations");
  }
  rc.geometry.speed_of_sound = cfg.get_double_or("geometry.speed_of_sound", 343.0);

  // STFT
  rc.stft.sample_rate = cfg.get_double_or("stft.sample_rate", cfg.get_double_or("scene.sample_rate", 16000.0));
  rc.stft.frame_size = static_cast<std::size_t>(cfg.get_int_or("stft.frame_size", 512));
  rc.stft.frame_shift = static_cast<std::size_t>(cfg.get_int_or("stft.frame_shift", 256));
  const auto window = cfg.get_or("stft.window", "hann");
  if (window == "hann") rc.stft.window = WindowKind::hann;
  else if (window == "rectangular") rc.stft.window = WindowKind::rectangular;
  else throw ConfigError("stft.window: expected hann or rectangular");

  // Input: simulated scene or recorded WAV
  if (cfg.has("input.wav")) {
    rc.input_wav = cfg.get_path("input.wav");
    if (cfg.has("input.truth")) rc.truth = cfg.get_point("input.truth");
  } else {
    SceneSpec scene;
    scene.geometry = rc.geometry;
    scene.sample_rate = rc.stft.sample_rate;
    scene.source.position = cfg.get_point("scene.source.position");
    const auto signal = cfg.get_or("scene.source.signal", "white_noise");
    if (signal == "white_noise") scene.source.kind = SourceSignalKind::white_noise;
    else if (signal == "tone") scene.source.kind = SourceSignalKind::tone;
    else if (signal == "file") scene.source.kind = SourceSignalKind::file;
    else throw ConfigError("scene.source.signal: expected white_noise, tone or file");
    scene.source.tone_hz = cfg.get_double_or("scene.source.tone_hz", 1000.0);
    if (cfg.has("scene.source.rolloff_hz")) scene.source.rolloff_hz = cfg.get_double("scene.source.rolloff_hz");
    if (scene.source.kind == SourceSignalKind::file) scene.source.file = cfg.get_path("scene.source.file").string();
    scene.cardioid_mics = cfg.get_bool_or("scene.cardioid_mics", false);
    scene.noise_only_s = cfg.get_double_or("scene.noise_only_s", 3.0);
    scene.source_s = cfg.get_double_or("scene.source_s", 3.0);
    scene.seed = static_cast<std::uint64_t>(cfg.get_int_or("scene.seed", 1));

    const auto noise = cfg.get_or("scene.noise.kind", "none");
    if (noise == "none") {
      scene.noise.kind = NoiseKind::none;
    } else if (noise == "white") {
      scene.noise.kind = NoiseKind::spatially_white;
    } else if (noise == "diffuse" || noise == "isotropic") {
      const bool spherical = noise == "isotropic";
      scene.noise.kind = NoiseKind::shaped;
      scene.noise.field = diffuse_noise_field(
          rc.geometry, static_cast<std::size_t>(cfg.get_int_or("scene.noise.directions", spherical ? 128 : 36)),
          cfg.get_double_or("scene.noise.sensor_floor", 0.01), scene.cardioid_mics, spherical);
      if (cfg.has("scene.noise.pink_corner_hz"))
        scene.noise.field = pink_tilt(std::move(scene.noise.field), cfg.get_double("scene.noise.pink_corner_hz"));
    } else {
      throw ConfigError("scene.noise.kind: expected none, white, diffuse or isotropic");
    }
    const auto snr = cfg.get_or("scene.noise.snr_db", "none");
    if (snr != "none") scene.noise.snr_db = detail::parse_double(snr);
    rc.scene = std::move(scene);
  }

  // Model
  const auto model = cfg.get_or("model.kind", "far_field");
  if (model == "far_field") rc.model.kind = ModelKind::far_field;
  else if (model == "near_field") rc.model.kind = ModelKind::near_field;
  else if (model == "atf_table") rc.model.kind = ModelKind::atf_table;
  else throw ConfigError("model.kind: expected far_field, near_field or atf_table");
  rc.model.r_min = cfg.get_double_or("model.r_min", 0.05);
  const auto directivity = cfg.get_or("model.directivity", "none");
  if (directivity == "cardioid") rc.model.directivity = true;
  else if (directivity != "none") throw ConfigError("model.directivity: expected none or cardioid");
  if (rc.model.kind == ModelKind::atf_table) {
    rc.model.atf_table = cfg.get_path("model.atf_table");
    rc.model.atf_geometry = cfg.has("model.atf_geometry") ? cfg.get_path("model.atf_geometry")
                                                          : cfg.get_path("geometry.file");
  }

  rc.beamformer = parse_beamformer(cfg.get_or("beamformer.kind", "mvcnr"));
  rc.weighting = parse_weighting(cfg.get_or("weighting.kind", "none"));
  if (cfg.has("weighting.band")) {
    const auto b = cfg.get_doubles("weighting.band");
    if (b.size() != 2) throw ConfigError("weighting.band: expected 'lo,hi'");
    rc.band = {b[0], b[1]};
  }

  // Grid
  const auto grid = cfg.get_or("grid.kind", "planar");
  if (grid == "planar") {
    rc.grid.kind = GridKind::planar;
    const auto xs = cfg.get_doubles("grid.x");
    const auto ys = cfg.get_doubles("grid.y");
    if (xs.size() != 2 || ys.size() != 2) throw ConfigError("grid.x / grid.y: expected 'min,max'");
    rc.grid.x_min = xs[0];
    rc.grid.x_max = xs[1];
    rc.grid.y_min = ys[0];
    rc.grid.y_max = ys[1];
    rc.grid.z = cfg.get_double_or("grid.z", 0.0);
    rc.grid.spacing = cfg.get_double_or("grid.spacing", 0.05);
  } else if (grid == "azimuth") {
    rc.grid.kind = GridKind::azimuth;
    rc.grid.spacing = cfg.get_double_or("grid.spacing", 5.0);
    if (cfg.has("grid.center")) rc.grid.center = cfg.get_point("grid.center");
    rc.grid.radius = cfg.get_double_or("grid.radius", 5.0);
  } else if (grid == "table") {
    rc.grid.kind = GridKind::points;
  } else {
    throw ConfigError("grid.kind: expected planar, azimuth or table");
  }

  rc.smoothing.alpha = cfg.get_double_or("smoothing.alpha", 0.2);
  rc.smoothing.tau_s = cfg.get_double_or("smoothing.tau_s", 0.075);
  rc.eps_reg = cfg.get_double_or("ncm.eps_reg", 0.01);
  rc.noise_segment_s = cfg.get_double_or("ncm.noise_segment_s", rc.scene ? rc.scene->noise_only_s : 3.0);
  const auto ncm = cfg.get_or("ncm.source", "noise_segment");
  if (ncm == "noise_segment") rc.ncm_source = NcmSource::noise_segment;
  else if (ncm == "identity") rc.ncm_source = NcmSource::identity;
  else throw ConfigError("ncm.source: expected noise_segment or identity");
  rc.activity_threshold_db = cfg.get_double_or("activity.threshold_db", 40.0);

  if (cfg.has("sweep.snr_db")) rc.sweep_snr_db = cfg.get_doubles("sweep.snr_db");
  rc.sweep_seeds = static_cast<std::size_t>(cfg.get_int_or("sweep.seeds", 1));
  rc.sweep_random_azimuth_radius = cfg.get_double_or("sweep.random_azimuth_radius", 0.0);

  if (const auto unread = cfg.unread_keys(); !unread.empty())
    throw ConfigError("unknown config key '" + unread.front() + "'");
  rc.validate();
  return rc;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  return parse_run_config(Config::load(path));
}

CandidateGrid build_grid(const RunConfig& config) {
  switch (config.grid.kind) {
    case GridKind::planar:
      return CandidateGrid::planar(config.grid.x_min, config.grid.x_max, config.grid.y_min, config.grid.y_max,
                                   config.grid.z, config.grid.spacing);
    case GridKind::azimuth:
      return CandidateGrid::azimuth(config.grid.spacing, config.grid.center.value_or(config.geometry.center()),
                                    config.grid.radius);
    case GridKind::points: {
      const AtfTable table = load_atf_table(config.model.atf_table, config.model.atf_geometry);
      return CandidateGrid::from_points(table.points());
    }
  }
  throw ConfigError("unsupported grid kind");
}

std::shared_ptr<const AcousticModel> build_model(const RunConfig& config) {
  switch (config.model.kind) {
    case ModelKind::far_field:
      return std::make_shared<FreeFieldModel>(config.geometry, PropagationKind::far_field, config.model.r_min,
                                              config.model.directivity);
    case ModelKind::near_field:
      return std::make_shared<FreeFieldModel>(config.geometry, PropagationKind::near_field, config.model.r_min,
                                              config.model.directivity);
    case ModelKind::atf_table: {
      auto table = std::make_shared<AtfTable>(load_atf_table(config.model.atf_table, config.model.atf_geometry));
      if (table->num_mics() != config.geometry.size()) throw ConfigError("ATF table mic count differs from geometry");
      return std::make_shared<TableModel>(std::move(table));
    }
  }
  throw ConfigError("unsupported model kind");
}

}  // namespace gsrp
