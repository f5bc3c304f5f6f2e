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

// Run configuration files.
//
// Format: UTF-8 text, first non-comment line `gsrp-config 1`, then one
// `dotted.key = value` per line. '#' starts a comment. Lists are
// comma-separated; 3-D points are `x,y,z`; point lists separate points
// with ';'. Relative paths resolve against the config file's directory.

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "gsrp/acoustic_models.hpp"
#include "gsrp/beamformers.hpp"
#include "gsrp/covariance.hpp"
#include "gsrp/simulator.hpp"
#include "gsrp/srp.hpp"
#include "gsrp/stft.hpp"
#include "gsrp/weighting.hpp"

namespace gsrp {

inline constexpr std::string_view kConfigHeader = "gsrp-config 1";

class Config {
 public:
  static Config parse(std::string_view text, const std::filesystem::path& base_dir = {});
  static Config load(const std::filesystem::path& path);

  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;  // throws ConfigError when absent
  std::string get_or(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  long long get_int_or(const std::string& key, long long fallback) const;
  bool get_bool_or(const std::string& key, bool fallback) const;
  std::vector<double> get_doubles(const std::string& key) const;
  Vec3 get_point(const std::string& key) const;
  std::vector<Vec3> get_points(const std::string& key) const;
  std::filesystem::path get_path(const std::string& key) const;

  void set(const std::string& key, std::string value);
  const std::map<std::string, std::string>& entries() const { return entries_; }
  const std::filesystem::path& base_dir() const { return base_dir_; }

  // Keys never read by any getter; used to reject typos.
  std::vector<std::string> unread_keys() const;

 private:
  std::map<std::string, std::string> entries_;
  mutable std::set<std::string> read_;
  std::filesystem::path base_dir_;
};

enum class ModelKind { far_field, near_field, atf_table };
enum class NcmSource { noise_segment, identity };

struct ModelSpec {
  ModelKind kind = ModelKind::far_field;
  double r_min = 0.05;
  bool directivity = false;  // cardioid gains composed onto the free-field model
  std::filesystem::path atf_table;
  std::filesystem::path atf_geometry;
};

struct GridSpec {
  GridKind kind = GridKind::planar;
  double x_min = -1.0, x_max = 1.0, y_min = -1.0, y_max = 1.0, z = 0.0;
  double spacing = 0.05;         // meters (planar) or degrees (azimuth)
  std::optional<Vec3> center;    // azimuth grid center, default array center
  double radius = 5.0;           // azimuth grid candidate distance
};

struct RunConfig {
  std::string name;
  // Exactly one of scene / input_wav is used.
  std::optional<SceneSpec> scene;
  std::filesystem::path input_wav;
  std::optional<Vec3> truth;  // ground truth for input_wav runs

  ArrayGeometry geometry;
  ModelSpec model;
  BeamformerKind beamformer = BeamformerKind::mvcnr;
  WeightingKind weighting = WeightingKind::none;
  FrequencyBand band;
  StftParams stft;
  GridSpec grid;
  SmoothingParams smoothing;
  double eps_reg = 0.01;
  double noise_segment_s = 3.0;
  NcmSource ncm_source = NcmSource::noise_segment;
  double activity_threshold_db = 40.0;

  // eval sweeps
  std::vector<double> sweep_snr_db;
  std::size_t sweep_seeds = 1;
  double sweep_random_azimuth_radius = 0.0;  // > 0: random source azimuth per seed

  void validate() const;
};

RunConfig parse_run_config(const Config& cfg);
RunConfig load_run_config(const std::filesystem::path& path);

CandidateGrid build_grid(const RunConfig& config);
std::shared_ptr<const AcousticModel> build_model(const RunConfig& config);

}  // namespace gsrp
