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

#include <memory>
#include <span>

#include "gsrp/acoustic_models.hpp"
#include "gsrp/beamformers.hpp"
#include "gsrp/covariance.hpp"
#include "gsrp/stft.hpp"
#include "gsrp/weighting.hpp"

namespace gsrp {

enum class GridKind { planar, azimuth, points };

// Ordered candidate positions. Planar grids are row-major with x varying
// fastest; azimuth grids ascend from 0 degrees and place each candidate at
// `radius` from `center` in the horizontal plane.
class CandidateGrid {
 public:
  static CandidateGrid planar(double x_min, double x_max, double y_min, double y_max, double z,
                              double spacing);
  static CandidateGrid azimuth(double spacing_deg, const Vec3& center, double radius);
  static CandidateGrid from_points(std::vector<Vec3> points);

  GridKind kind() const { return kind_; }
  std::size_t size() const { return points_.size(); }
  const Vec3& point(std::size_t i) const { return points_[i]; }
  const std::vector<Vec3>& points() const { return points_; }
  double spacing() const { return spacing_; }

  // Planar layout.
  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  std::size_t index_of(std::size_t ix, std::size_t iy) const { return iy * nx_ + ix; }
  std::pair<std::size_t, std::size_t> cell_of(std::size_t index) const { return {index % nx_, index / nx_}; }

  // Azimuth layout.
  double azimuth_deg(std::size_t i) const { return azimuths_[i]; }
  const Vec3& center() const { return center_; }

  // Candidate closest to p (lowest ordinal on ties).
  std::size_t nearest(const Vec3& p) const;
  std::size_t nearest_azimuth(double theta_deg) const;

 private:
  GridKind kind_ = GridKind::points;
  std::vector<Vec3> points_;
  std::vector<double> azimuths_;
  double spacing_ = 0.0;
  std::size_t nx_ = 0;
  std::size_t ny_ = 0;
  Vec3 center_;
};

// Azimuth in degrees, [0, 360), of p as seen from center in the x-y plane.
double azimuth_of(const Vec3& p, const Vec3& center);

struct SrpMap {
  std::vector<double> values;
  std::size_t frame = 0;
};

struct MapPeak {
  std::size_t index = 0;
  double value = 0.0;
};

// Largest value; ties go to the lowest ordinal. NaNs are skipped, an all-NaN
// map throws NumericalError.
MapPeak argmax(const SrpMap& map);

SrpMap average_maps(std::span<const SrpMap> maps);

struct SrpOptions {
  BeamformerKind beamformer = BeamformerKind::mvcnr;
  WeightingKind weighting = WeightingKind::none;
  FrequencyBand band;
  double eps_reg = 0.01;  // NCM loading eps_reg * sigma_y^2, also applied before inverting the SCM
};

// Broadband SRP map evaluation. Steering vectors for every in-band bin and
// candidate are evaluated once at construction.
class SrpEngine {
 public:
  SrpEngine(const AcousticModel& model, const CandidateGrid& grid, const StftParams& stft,
            SrpOptions options);

  // scm: one matrix per STFT bin (bins outside the band are not read).
  // ncm: raw noise covariance per bin, regularized here; may be null when the
  // configuration does not need it.
  SrpMap compute(std::span<const HermitianMatrix> scm, const std::vector<HermitianMatrix>* ncm,
                 std::size_t frame = 0) const;

  // Frequency weight zeta^2 actually applied to bin k for the given statistics.
  double zeta2(std::size_t bin, const HermitianMatrix& scm, const HermitianMatrix* ncm) const;

  const std::vector<std::size_t>& active_bins() const { return bins_; }
  const SrpOptions& options() const { return options_; }
  std::size_t num_mics() const { return num_mics_; }
  // Steering vectors that vanished at every microphone; such points get PSD 0.
  std::size_t null_steering_count() const { return null_count_; }

 private:
  struct BinStatistics;
  BinStatistics prepare(std::size_t bin, const HermitianMatrix& scm, const HermitianMatrix* ncm) const;
  std::span<const Complex> steering(std::size_t slot, std::size_t point) const;

  SrpOptions options_;
  std::size_t num_points_;
  std::size_t num_mics_;
  std::vector<std::size_t> bins_;
  std::vector<Complex> bank_;     // [slot][point][mic]
  std::vector<char> null_;        // [slot][point]
  std::size_t null_count_ = 0;
};

// One-shot convenience wrapper around SrpEngine.
SrpMap compute_map(std::span<const HermitianMatrix> scm, const std::vector<HermitianMatrix>* ncm,
                   const AcousticModel& model, const CandidateGrid& grid, const StftParams& stft,
                   const SrpOptions& options, std::size_t frame = 0);

}  // namespace gsrp
