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

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <span>

#include "gsrp/types.hpp"

namespace gsrp {

struct ArrayGeometry {
  std::vector<Vec3> mic_positions;
  std::optional<std::vector<Vec3>> mic_orientations;  // unit vectors
  double speed_of_sound = 343.0;

  std::size_t size() const { return mic_positions.size(); }
  Vec3 center() const;
  // Throws ConfigError: fewer than two mics, orientation count or norm wrong.
  void validate() const;
};

// Reads `mic_index,x,y,z[,ox,oy,oz]` CSV (header line required).
ArrayGeometry load_geometry(const std::filesystem::path& path);
void save_geometry(const ArrayGeometry& geom, const std::filesystem::path& path);

struct SteeringVector {
  ComplexVector values;
  double frequency = 0.0;
  Vec3 point;

  // True when every element is zero, e.g. a point in the null of every
  // directional microphone.
  bool is_null() const;
};

SteeringVector steer_far_field(const ArrayGeometry& geom, const Vec3& point, double freq_hz);

// Elements exp(-j 2 pi f r/c) / (4 pi r) with r clamped below at r_min.
SteeringVector steer_near_field(const ArrayGeometry& geom, const Vec3& point, double freq_hz,
                                double r_min);

// 0.5 (1 + cos angle(orientation, direction)); both arguments need not be unit.
double cardioid_gain(const Vec3& mic_orientation, const Vec3& direction_to_source);

// Per-mic cardioid gains toward `point`. Requires mic orientations.
std::vector<double> cardioid_gains(const ArrayGeometry& geom, const Vec3& point);

SteeringVector compose_directivity(const SteeringVector& d, std::span<const double> gains);

// Tabulated acoustic transfer functions on a fixed point grid.
class AtfTable {
 public:
  AtfTable(ArrayGeometry geometry, std::vector<Vec3> points, std::vector<double> frequencies);

  const ArrayGeometry& geometry() const { return geometry_; }
  const std::vector<Vec3>& points() const { return points_; }
  const std::vector<double>& frequencies() const { return frequencies_; }
  std::size_t num_mics() const { return geometry_.size(); }

  std::span<const Complex> gains(std::size_t point, std::size_t bin) const;
  std::span<Complex> gains(std::size_t point, std::size_t bin);

  // Index of the table bin at freq_hz, or nullopt (match within 1e-6 Hz).
  std::optional<std::size_t> find_bin(double freq_hz) const;

 private:
  ArrayGeometry geometry_;
  std::vector<Vec3> points_;
  std::vector<double> frequencies_;
  std::vector<Complex> gains_;  // [point][bin][mic]
};

// CSV: `point_index,x,y,z,freq_hz,mic_index,re,im`, one row per triple; every
// (point, bin, mic) triple must appear exactly once.
AtfTable load_atf_table(const std::filesystem::path& table_csv,
                        const std::filesystem::path& geometry_csv);
void save_atf_table(const AtfTable& table, const std::filesystem::path& table_csv,
                    const std::filesystem::path& geometry_csv);

SteeringVector steer_from_table(const AtfTable& table, std::size_t point_index, std::size_t bin);

// Steering model evaluated by the grid search. point_index is the candidate
// ordinal, used by tabulated models; analytic models ignore it.
class AcousticModel {
 public:
  virtual ~AcousticModel() = default;
  virtual std::size_t num_mics() const = 0;
  virtual ComplexVector steer(const Vec3& point, std::size_t point_index, double freq_hz) const = 0;
};

enum class PropagationKind { far_field, near_field };

class FreeFieldModel : public AcousticModel {
 public:
  FreeFieldModel(ArrayGeometry geometry, PropagationKind kind, double r_min = 0.05,
                 bool cardioid_directivity = false);

  std::size_t num_mics() const override { return geometry_.size(); }
  ComplexVector steer(const Vec3& point, std::size_t point_index, double freq_hz) const override;

 private:
  ArrayGeometry geometry_;
  PropagationKind kind_;
  double r_min_;
  bool directivity_;
};

class TableModel : public AcousticModel {
 public:
  explicit TableModel(std::shared_ptr<const AtfTable> table);

  std::size_t num_mics() const override { return table_->num_mics(); }
  ComplexVector steer(const Vec3& point, std::size_t point_index, double freq_hz) const override;

 private:
  std::shared_ptr<const AtfTable> table_;
};

// Wraps a model and multiplies every steering vector by scale(freq_hz, point_index).
// Used to check that GSRP maps do not depend on ATF vs. RTF normalization.
class ScaledModel : public AcousticModel {
 public:
  using ScaleFn = std::function<Complex(double freq_hz, std::size_t point_index)>;
  ScaledModel(std::shared_ptr<const AcousticModel> base, ScaleFn scale);

  std::size_t num_mics() const override { return base_->num_mics(); }
  ComplexVector steer(const Vec3& point, std::size_t point_index, double freq_hz) const override;

 private:
  std::shared_ptr<const AcousticModel> base_;
  ScaleFn scale_;
};

}  // namespace gsrp
