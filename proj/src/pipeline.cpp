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

#include "gsrp/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "csv_util.hpp"
#include "gsrp/wav.hpp"

namespace gsrp {

double compute_error(const Location& estimate, const Location& truth) {
  if (estimate.kind != truth.kind) throw DimensionMismatch("cannot compare a position with an azimuth");
  if (estimate.kind == LocationKind::position) return distance(estimate.point, truth.point);
  double d = std::fmod(std::abs(estimate.azimuth_deg - truth.azimuth_deg), 360.0);
  if (d > 180.0) d = 360.0 - d;
  return d;
}

Location grid_location(const CandidateGrid& grid, std::size_t i) {
  if (grid.kind() == GridKind::azimuth) return Location::angle(grid.azimuth_deg(i));
  return Location::at(grid.point(i));
}

Location truth_location(const CandidateGrid& grid, const Vec3& source) {
  if (grid.kind() == GridKind::azimuth) return Location::angle(azimuth_of(source, grid.center()));
  return Location::at(source);
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const double h = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

namespace {

bool needs_ncm(const RunConfig& config) {
  return needs_noise_covariance(config.beamformer) || weighting_needs_noise_covariance(config.weighting);
}

std::vector<double> frame_energies(const MultichannelAudio& audio, const StftParams& params, std::size_t frames) {
  std::vector<double> e(frames, 0.0);
  for (std::size_t l = 0; l < frames; ++l) {
    const std::size_t start = l * params.frame_shift;
    for (const auto& ch : audio.channels)
      for (std::size_t n = start; n < start + params.frame_size && n < ch.size(); ++n) e[l] += ch[n] * ch[n];
  }
  return e;
}

}  // namespace

RunReport localize(const RunConfig& config, const AcousticModel& model, const CandidateGrid& grid,
                   const LocalizeInput& input) {
  const std::size_t M = config.geometry.size();
  if (input.mixed.num_channels() != M || model.num_mics() != M)
    throw ConfigError("channel count mismatch between input, geometry and model");
  if (input.clean && input.clean->num_channels() != M) throw ConfigError("clean reference channel count mismatch");
  if (std::abs(input.mixed.sample_rate - config.stft.sample_rate) > 1e-9)
    throw ConfigError("input sample rate differs from stft.sample_rate");

  const auto tiles = analyze(input.mixed, config.stft);
  const std::size_t frames = tiles.num_frames();
  const auto& p = config.stft;

  // Noise-only frames lie entirely inside the leading noise segment; speech
  // frames start at or after its end.
  std::size_t noise_frames = 0;
  while (noise_frames < frames && noise_frames * p.frame_shift + p.frame_size <= input.noise_only_samples)
    ++noise_frames;
  std::size_t first_speech = 0;
  while (first_speech < frames && first_speech * p.frame_shift < input.noise_only_samples) ++first_speech;

  std::optional<std::vector<HermitianMatrix>> ncm;
  if (config.ncm_source == NcmSource::identity) {
    ncm.emplace(p.num_bins(), HermitianMatrix::identity(M));
  } else if (noise_frames > 0) {
    ncm = estimate_ncm(tiles, 0, noise_frames).bins;
  } else if (needs_ncm(config)) {
    throw ConfigError("configuration needs a noise covariance but the input has no noise-only segment");
  }

  SrpOptions options{config.beamformer, config.weighting, config.band, config.eps_reg};
  const SrpEngine engine(model, grid, p, options);

  const auto& reference = input.clean ? *input.clean : input.mixed;
  const auto energy = frame_energies(reference, p, frames);
  double peak = 0.0;
  for (std::size_t l = first_speech; l < frames; ++l) peak = std::max(peak, energy[l]);
  const double threshold = peak * std::pow(10.0, -config.activity_threshold_db / 10.0);

  RunReport report;
  report.grid_kind = grid.kind();
  report.speech_frames = frames - std::min(first_speech, frames);
  std::optional<Location> truth;
  if (input.truth) truth = truth_location(grid, *input.truth);

  RecursiveScm scm(p.num_bins(), M, config.smoothing.alpha);
  std::vector<double> sum(grid.size(), 0.0);
  std::vector<double> errors;
  for (std::size_t l = first_speech; l < frames; ++l) {
    scm.update(tiles, l, engine.active_bins());
    if (!(peak > 0.0) || !(energy[l] > threshold)) continue;
    SrpMap map = engine.compute(scm.bins(), ncm ? &*ncm : nullptr, l);
    const auto peak_pt = argmax(map);
    FrameEstimate fe;
    fe.frame = l;
    fe.time_s = static_cast<double>(l * p.frame_shift) / p.sample_rate;
    fe.index = peak_pt.index;
    fe.estimate = grid_location(grid, peak_pt.index);
    fe.value = peak_pt.value;
    if (truth) {
      fe.truth = truth;
      fe.error = compute_error(fe.estimate, *truth);
      errors.push_back(fe.error);
    }
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += map.values[i];
    report.frames.push_back(std::move(fe));
    report.last_map = std::move(map);
  }
  report.frames_evaluated = report.frames.size();
  if (report.frames_evaluated > 0) {
    report.average_map.values = std::move(sum);
    for (auto& v : report.average_map.values) v /= static_cast<double>(report.frames_evaluated);
  }
  if (!errors.empty()) {
    double total = 0.0;
    for (double e : errors) total += e;
    report.mle = total / static_cast<double>(errors.size());
    report.q25 = quantile(errors, 0.25);
    report.q75 = quantile(errors, 0.75);
  }
  return report;
}

LocalizeInput make_input(const RunConfig& config) {
  LocalizeInput in;
  const auto noise_samples =
      static_cast<std::size_t>(std::llround(config.noise_segment_s * config.stft.sample_rate));
  if (config.scene) {
    auto scene = simulate(*config.scene);
    in.mixed = std::move(scene.samples);
    in.clean = std::move(scene.clean);
    in.noise_only_samples = std::min(noise_samples, scene.noise_only_samples);
    in.truth = scene.source_position;
  } else {
    in.mixed = read_wav(config.input_wav);
    in.noise_only_samples = noise_samples;
    in.truth = config.truth;
  }
  return in;
}

RunReport localize_run(const RunConfig& config) {
  config.validate();
  const auto grid = build_grid(config);
  const auto model = build_model(config);
  auto report = localize(config, *model, grid, make_input(config));
  if (config.scene) {
    // Reported SNRs come from the same deterministic simulation.
    const auto scene = simulate(*config.scene);
    report.snr_db_average = scene.snr_db_average;
    report.snr_db_closest = scene.snr_db_closest;
  }
  return report;
}

namespace {

void append_location(std::string& row, const Location& loc, GridKind kind) {
  if (loc.kind == LocationKind::azimuth) {
    row += ',' + detail::format_number(loc.azimuth_deg);
  } else {
    row += ',' + detail::format_number(loc.point.x) + ',' + detail::format_number(loc.point.y);
    if (kind == GridKind::points) row += ',' + detail::format_number(loc.point.z);
  }
}

}  // namespace

std::string report_csv(const RunReport& report) {
  std::string out = "frame,time_s";
  switch (report.grid_kind) {
    case GridKind::azimuth: out += ",est_theta_deg,truth_theta_deg,error_deg\n"; break;
    case GridKind::planar: out += ",est_x_m,est_y_m,truth_x_m,truth_y_m,error_m\n"; break;
    case GridKind::points: out += ",est_x_m,est_y_m,est_z_m,truth_x_m,truth_y_m,truth_z_m,error_m\n"; break;
  }
  for (const auto& f : report.frames) {
    std::string row = std::to_string(f.frame) + ',' + detail::format_number(f.time_s);
    append_location(row, f.estimate, report.grid_kind);
    if (f.truth) {
      append_location(row, *f.truth, report.grid_kind);
      row += ',' + detail::format_number(f.error);
    } else {
      const int cols = report.grid_kind == GridKind::azimuth ? 1 : report.grid_kind == GridKind::planar ? 2 : 3;
      for (int c = 0; c < cols; ++c) row += ",nan";
      row += ",nan";
    }
    out += row + '\n';
  }
  return out;
}

void write_report_csv(const RunReport& report, const std::filesystem::path& path) {
  auto out = detail::open_output(path.string());
  out << report_csv(report);
}

std::string heatmap_csv(const SrpMap& map, const CandidateGrid& grid, bool normalize) {
  if (map.values.size() != grid.size()) throw DimensionMismatch("map and grid sizes differ");
  double scale = 1.0;
  if (normalize) {
    const double peak = argmax(map).value;
    if (!(peak > 0.0)) throw NumericalError("cannot normalize a map whose maximum is not positive");
    scale = 1.0 / peak;
  }
  std::string out;
  switch (grid.kind()) {
    case GridKind::azimuth: out = "theta_deg,value\n"; break;
    case GridKind::planar: out = "x_m,y_m,value\n"; break;
    case GridKind::points: out = "x_m,y_m,z_m,value\n"; break;
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& pt = grid.point(i);
    switch (grid.kind()) {
      case GridKind::azimuth: out += detail::format_number(grid.azimuth_deg(i)); break;
      case GridKind::planar: out += detail::format_number(pt.x) + ',' + detail::format_number(pt.y); break;
      case GridKind::points:
        out += detail::format_number(pt.x) + ',' + detail::format_number(pt.y) + ',' + detail::format_number(pt.z);
        break;
    }
    out += ',' + detail::format_number(map.values[i] * scale) + '\n';
  }
  return out;
}

void export_heatmap(const SrpMap& map, const CandidateGrid& grid, const std::filesystem::path& path,
                    bool normalize) {
  const auto text = heatmap_csv(map, grid, normalize);
  auto out = detail::open_output(path.string());
  out << text;
}

std::vector<double> read_heatmap(const std::filesystem::path& path) {
  auto in = detail::open_input(path.string());
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty heatmap file");
  const auto header = detail::split(line, ',');
  if (header.empty() || header.back() != "value") throw ConfigError("not a heatmap CSV");
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    const auto f = detail::split(line, ',');
    if (f.size() != header.size()) throw ConfigError("heatmap row has the wrong number of columns");
    values.push_back(detail::parse_double(f.back()));
  }
  return values;
}

std::vector<EvalRow> evaluate_config(const RunConfig& config, const std::string& label) {
  if (!config.scene) throw ConfigError(label + ": eval sweeps need a simulated scene");
  std::vector<std::optional<double>> snrs;
  for (double s : config.sweep_snr_db) snrs.emplace_back(s);
  if (snrs.empty()) snrs.push_back(config.scene->noise.snr_db);

  const auto grid = build_grid(config);
  const auto model = build_model(config);
  std::vector<EvalRow> rows;
  for (const auto& snr : snrs) {
    for (std::size_t s = 0; s < config.sweep_seeds; ++s) {
      RunConfig run = config;
      run.scene->seed = config.scene->seed + s;
      run.scene->noise.snr_db = snr;
      if (config.sweep_random_azimuth_radius > 0.0) {
        // Source direction drawn from the run's seed so every SNR sees the same DOAs.
        std::mt19937_64 rng(run.scene->seed);
        std::uniform_real_distribution<double> az(0.0, 360.0);
        const double theta = az(rng) * std::numbers::pi / 180.0;
        const Vec3 c = config.geometry.center();
        const double r = config.sweep_random_azimuth_radius;
        run.scene->source.position = {c.x + r * std::cos(theta), c.y + r * std::sin(theta),
                                      config.scene->source.position.z};
      }
      const auto report = localize(run, *model, grid, make_input(run));
      EvalRow row;
      row.config = label;
      row.beamformer = run.beamformer;
      row.weighting = run.weighting;
      row.snr_db = snr;
      row.seed = run.scene->seed;
      row.source = run.scene->source.position;
      row.frames = report.frames_evaluated;
      row.mle = report.mle;
      row.q25 = report.q25;
      row.q75 = report.q75;
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<EvalRow> evaluate_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw ConfigError("'" + dir.string() + "' is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".cfg") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ConfigError("no .cfg files in '" + dir.string() + "'");
  std::vector<EvalRow> rows;
  for (const auto& f : files) {
    auto part = evaluate_config(load_run_config(f), f.stem().string());
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::string eval_csv(const std::vector<EvalRow>& rows) {
  std::string out = "config,beamformer,weighting,snr_db,seed,source_x_m,source_y_m,source_z_m,frames,mle,q25,q75\n";
  for (const auto& r : rows) {
    out += r.config + ',' + std::string(to_string(r.beamformer)) + ',' + std::string(to_string(r.weighting)) + ',' +
           (r.snr_db ? detail::format_number(*r.snr_db) : std::string("inf")) + ',' + std::to_string(r.seed) + ',' +
           detail::format_number(r.source.x) + ',' + detail::format_number(r.source.y) + ',' +
           detail::format_number(r.source.z) + ',' + std::to_string(r.frames) + ',' + detail::format_number(r.mle) +
           ',' + detail::format_number(r.q25) + ',' + detail::format_number(r.q75) + '\n';
  }
  return out;
}

}  // namespace gsrp
