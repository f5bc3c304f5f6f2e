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

// End-to-end localization: STFT, noise statistics, recursive SCM, per-frame
// SRP maps, argmax and error bookkeeping.

#include <filesystem>
#include <optional>
#include <string>

#include "gsrp/config.hpp"
#include "gsrp/simulator.hpp"
#include "gsrp/srp.hpp"

namespace gsrp {

enum class LocationKind { position, azimuth };

struct Location {
  LocationKind kind = LocationKind::position;
  Vec3 point;
  double azimuth_deg = 0.0;

  static Location at(const Vec3& p) { return {LocationKind::position, p, 0.0}; }
  static Location angle(double theta_deg) { return {LocationKind::azimuth, {}, theta_deg}; }
};

// Euclidean distance in meters, or wrapped absolute angle difference in
// [0, 180] degrees. Mixing kinds throws DimensionMismatch.
double compute_error(const Location& estimate, const Location& truth);

// Location of grid candidate i in the grid's natural coordinates.
Location grid_location(const CandidateGrid& grid, std::size_t i);
Location truth_location(const CandidateGrid& grid, const Vec3& source);

struct FrameEstimate {
  std::size_t frame = 0;
  double time_s = 0.0;  // frame start
  std::size_t index = 0;
  Location estimate;
  double value = 0.0;
  std::optional<Location> truth;
  double error = 0.0;
};

struct RunReport {
  GridKind grid_kind = GridKind::planar;
  std::vector<FrameEstimate> frames;  // active frames only
  std::size_t frames_evaluated = 0;
  std::size_t speech_frames = 0;
  double mle = 0.0;
  double q25 = 0.0;
  double q75 = 0.0;
  SrpMap last_map;
  SrpMap average_map;
  double snr_db_average = 0.0;
  double snr_db_closest = 0.0;
};

struct LocalizeInput {
  MultichannelAudio mixed;
  std::optional<MultichannelAudio> clean;  // activity reference; mixture energy is used when absent
  std::size_t noise_only_samples = 0;
  std::optional<Vec3> truth;
};

// Quantile with linear interpolation between order statistics.
double quantile(std::vector<double> values, double q);

RunReport localize(const RunConfig& config, const AcousticModel& model, const CandidateGrid& grid,
                   const LocalizeInput& input);

// Simulates (or reads) the input described by config and localizes it.
RunReport localize_run(const RunConfig& config);

LocalizeInput make_input(const RunConfig& config);

std::string report_csv(const RunReport& report);
void write_report_csv(const RunReport& report, const std::filesystem::path& path);

std::string heatmap_csv(const SrpMap& map, const CandidateGrid& grid, bool normalize);
void export_heatmap(const SrpMap& map, const CandidateGrid& grid, const std::filesystem::path& path,
                    bool normalize);
// Values column of a heatmap CSV written by export_heatmap.
std::vector<double> read_heatmap(const std::filesystem::path& path);

struct EvalRow {
  std::string config;
  BeamformerKind beamformer = BeamformerKind::mvcnr;
  WeightingKind weighting = WeightingKind::none;
  std::optional<double> snr_db;
  std::uint64_t seed = 0;
  Vec3 source;
  std::size_t frames = 0;
  double mle = 0.0;
  double q25 = 0.0;
  double q75 = 0.0;
};

// All runs of one config's sweep: every SNR in sweep.snr_db times
// sweep.seeds consecutive seeds.
std::vector<EvalRow> evaluate_config(const RunConfig& config, const std::string& label);
// Every *.cfg file in dir, in lexicographic order.
std::vector<EvalRow> evaluate_dir(const std::filesystem::path& dir);
std::string eval_csv(const std::vector<EvalRow>& rows);

}  // namespace gsrp
