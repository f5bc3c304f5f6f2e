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

#include "gsrp/srp.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

namespace gsrp {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

std::size_t axis_count(double lo, double hi, double spacing) {
  if (!(spacing > 0.0) || !(hi >= lo)) throw ConfigError("planar grid needs spacing > 0 and max >= min");
  return static_cast<std::size_t>(std::floor((hi - lo) / spacing + 1e-9)) + 1;
}

}  // namespace

CandidateGrid CandidateGrid::planar(double x_min, double x_max, double y_min, double y_max, double z,
                                    double spacing) {
  CandidateGrid g;
  g.kind_ = GridKind::planar;
  g.spacing_ = spacing;
  g.nx_ = axis_count(x_min, x_max, spacing);
  g.ny_ = axis_count(y_min, y_max, spacing);
  g.points_.reserve(g.nx_ * g.ny_);
  for (std::size_t iy = 0; iy < g.ny_; ++iy)
    for (std::size_t ix = 0; ix < g.nx_; ++ix)
      g.points_.push_back({x_min + static_cast<double>(ix) * spacing,
                           y_min + static_cast<double>(iy) * spacing, z});
  return g;
}

CandidateGrid CandidateGrid::azimuth(double spacing_deg, const Vec3& center, double radius) {
  if (!(spacing_deg > 0.0 && spacing_deg <= 180.0)) throw ConfigError("azimuth spacing must lie in (0, 180]");
  if (!(radius > 0.0)) throw ConfigError("azimuth grid radius must be positive");
  CandidateGrid g;
  g.kind_ = GridKind::azimuth;
  g.spacing_ = spacing_deg;
  g.center_ = center;
  const auto n = static_cast<std::size_t>(std::ceil(360.0 / spacing_deg - 1e-9));
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = static_cast<double>(i) * spacing_deg;
    g.azimuths_.push_back(theta);
    g.points_.push_back(center + Vec3{std::cos(theta * kDegToRad), std::sin(theta * kDegToRad), 0.0} * radius);
  }
  return g;
}

CandidateGrid CandidateGrid::from_points(std::vector<Vec3> points) {
  if (points.empty()) throw ConfigError("candidate grid is empty");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw ConfigError("candidate grid has duplicate points");
  CandidateGrid g;
  g.kind_ = GridKind::points;
  g.points_ = std::move(points);
  return g;
}

std::size_t CandidateGrid::nearest(const Vec3& p) const {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const double d = distance(points_[i], p);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

std::size_t CandidateGrid::nearest_azimuth(double theta_deg) const {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < azimuths_.size(); ++i) {
    double d = std::fmod(std::abs(azimuths_[i] - theta_deg), 360.0);
    d = std::min(d, 360.0 - d);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

double azimuth_of(const Vec3& p, const Vec3& center) {
  double theta = std::atan2(p.y - center.y, p.x - center.x) / kDegToRad;
  if (theta < 0.0) theta += 360.0;
  return theta >= 360.0 ? theta - 360.0 : theta;
}

MapPeak argmax(const SrpMap& map) {
  std::optional<MapPeak> best;
  for (std::size_t i = 0; i < map.values.size(); ++i) {
    const double v = map.values[i];
    if (std::isnan(v)) continue;
    if (!best || v > best->value) best = MapPeak{i, v};
  }
  if (!best) throw NumericalError("SRP map is empty or all NaN");
  return *best;
}

SrpMap average_maps(std::span<const SrpMap> maps) {
  if (maps.empty()) throw ConfigError("no maps to average");
  SrpMap out{std::vector<double>(maps.front().values.size(), 0.0), maps.front().frame};
  for (const auto& m : maps) {
    if (m.values.size() != out.values.size()) throw DimensionMismatch("maps differ in size");
    for (std::size_t i = 0; i < m.values.size(); ++i) out.values[i] += m.values[i];
  }
  const double scale = 1.0 / static_cast<double>(maps.size());
  for (auto& v : out.values) v *= scale;
  return out;
}

struct SrpEngine::BinStatistics {
  HermitianMatrix scm;  // possibly PHAT-transformed
  std::optional<HermitianMatrix> ncm_inv;
  std::optional<HermitianMatrix> scm_inv;
  double sigma_v2 = 1.0;
  double zeta2 = 1.0;
};

SrpEngine::SrpEngine(const AcousticModel& model, const CandidateGrid& grid, const StftParams& stft,
                     SrpOptions options)
    : options_(options), num_points_(grid.size()), num_mics_(model.num_mics()) {
  stft.validate();
  options_.band.validate(stft.sample_rate / 2.0);
  if (options_.weighting == WeightingKind::phat && options_.beamformer != BeamformerKind::ds)
    throw ConfigError("PHAT weighting is only available with the DS beamformer");
  if (options_.eps_reg < 0.0) throw ConfigError("eps_reg must be non-negative");
  if (num_points_ == 0) throw ConfigError("candidate grid is empty");

  for (std::size_t k = 0; k < stft.num_bins(); ++k) {
    const double f = bin_frequency(k, stft);
    if (f >= options_.band.lo_hz && f <= options_.band.hi_hz) bins_.push_back(k);
  }
  if (bins_.empty()) throw ConfigError("no STFT bin falls inside the frequency band");

  bank_.resize(bins_.size() * num_points_ * num_mics_);
  null_.assign(bins_.size() * num_points_, 0);
  for (std::size_t s = 0; s < bins_.size(); ++s) {
    const double f = bin_frequency(bins_[s], stft);
    for (std::size_t p = 0; p < num_points_; ++p) {
      const ComplexVector d = model.steer(grid.point(p), p, f);
      if (d.size() != num_mics_) throw DimensionMismatch("steering vector length differs from mic count");
      std::copy(d.begin(), d.end(), bank_.begin() + static_cast<std::ptrdiff_t>((s * num_points_ + p) * num_mics_));
      if (std::all_of(d.begin(), d.end(), [](const Complex& v) { return v == Complex{}; })) {
        null_[s * num_points_ + p] = 1;
        ++null_count_;
      }
    }
  }
}

std::span<const Complex> SrpEngine::steering(std::size_t slot, std::size_t point) const {
  return {bank_.data() + (slot * num_points_ + point) * num_mics_, num_mics_};
}

SrpEngine::BinStatistics SrpEngine::prepare(std::size_t bin, const HermitianMatrix& scm,
                                            const HermitianMatrix* ncm) const {
  if (scm.dim() != num_mics_) throw DimensionMismatch("SCM size differs from mic count");
  BinStatistics st;
  const double sigma_y2 = average_power(scm);
  const bool want_ncm = needs_noise_covariance(options_.beamformer) ||
                        weighting_needs_noise_covariance(options_.weighting);
  if (ncm != nullptr) {
    if (ncm->dim() != num_mics_) throw DimensionMismatch("NCM size differs from mic count");
    const HermitianMatrix reg = regularize_ncm(*ncm, sigma_y2, options_.eps_reg);
    st.sigma_v2 = average_power(reg);
    if (want_ncm) st.ncm_inv = hermitian_inverse(reg);
  } else if (want_ncm) {
    throw ConfigError("configuration needs a noise covariance matrix (bin " + std::to_string(bin) + ")");
  }
  if (needs_scm_inverse(options_.beamformer))
    st.scm_inv = hermitian_inverse(scm.plus_identity(options_.eps_reg * sigma_y2));

  switch (options_.weighting) {
    case WeightingKind::none:
    case WeightingKind::phat:
      st.zeta2 = 1.0;
      break;
    case WeightingKind::snr:
      st.zeta2 = zeta2_snr(num_mics_);
      break;
    case WeightingKind::flat:
      st.zeta2 = zeta2_flat(*st.ncm_inv, scm);
      break;
    case WeightingKind::frob:
      st.zeta2 = zeta2_frob(st.sigma_v2, scm);
      break;
  }
  st.scm = options_.weighting == WeightingKind::phat ? phat_transform(scm) : scm;
  return st;
}

double SrpEngine::zeta2(std::size_t bin, const HermitianMatrix& scm, const HermitianMatrix* ncm) const {
  return prepare(bin, scm, ncm).zeta2;
}

SrpMap SrpEngine::compute(std::span<const HermitianMatrix> scm, const std::vector<HermitianMatrix>* ncm,
                          std::size_t frame) const {
  SrpMap map{std::vector<double>(num_points_, 0.0), frame};
  for (std::size_t s = 0; s < bins_.size(); ++s) {
    const std::size_t k = bins_[s];
    if (k >= scm.size() || (ncm != nullptr && k >= ncm->size()))
      throw DimensionMismatch("covariance spectrum has fewer bins than the STFT");
    BinStatistics st;
    try {
      st = prepare(k, scm[k], ncm != nullptr ? &(*ncm)[k] : nullptr);
    } catch (const NumericalError& e) {
      throw NumericalError("bin " + std::to_string(k) + ": " + e.what());
    }
    const BinBeamformer bf(options_.beamformer,
                           {&st.scm, st.ncm_inv ? &*st.ncm_inv : nullptr,
                            st.scm_inv ? &*st.scm_inv : nullptr, st.sigma_v2});
    const double zeta2 = st.zeta2;
    const char* nulls = null_.data() + s * num_points_;
    std::exception_ptr failure;
    std::size_t failed_point = 0;
    const auto n = static_cast<std::ptrdiff_t>(num_points_);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t p = 0; p < n; ++p) {
      const auto up = static_cast<std::size_t>(p);
      if (nulls[up]) continue;
      try {
        map.values[up] += zeta2 * bf.unit_psd(steering(s, up));
      } catch (...) {
#pragma omp critical
        if (!failure) {
          failure = std::current_exception();
          failed_point = up;
        }
      }
    }
    if (failure) {
      try {
        std::rethrow_exception(failure);
      } catch (const std::exception& e) {
        throw NumericalError("bin " + std::to_string(k) + ", point " + std::to_string(failed_point) + ": " +
                             e.what());
      }
    }
  }
  return map;
}

SrpMap compute_map(std::span<const HermitianMatrix> scm, const std::vector<HermitianMatrix>* ncm,
                   const AcousticModel& model, const CandidateGrid& grid, const StftParams& stft,
                   const SrpOptions& options, std::size_t frame) {
  return SrpEngine(model, grid, stft, options).compute(scm, ncm, frame);
}

}  // namespace gsrp
