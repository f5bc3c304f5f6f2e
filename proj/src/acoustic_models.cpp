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

#include "gsrp/acoustic_models.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <tuple>

#include "csv_util.hpp"

namespace gsrp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

}  // namespace

Vec3 ArrayGeometry::center() const {
  Vec3 c;
  for (const auto& p : mic_positions) c = c + p;
  return mic_positions.empty() ? c : c * (1.0 / static_cast<double>(mic_positions.size()));
}

void ArrayGeometry::validate() const {
  if (mic_positions.size() < 2) throw ConfigError("array needs at least two microphones");
  if (!(speed_of_sound > 0.0)) throw ConfigError("speed of sound must be positive");
  if (mic_orientations) {
    if (mic_orientations->size() != mic_positions.size())
      throw ConfigError("orientation count does not match microphone count");
    for (const auto& o : *mic_orientations)
      if (std::abs(o.norm() - 1.0) > 1e-6) throw ConfigError("mic orientations must be unit vectors");
  }
}

ArrayGeometry load_geometry(const std::filesystem::path& path) {
  auto in = detail::open_input(path.string());
  std::string line;
  std::getline(in, line);
  if (detail::trim(line).substr(0, 9) != "mic_index")
    throw ConfigError(path.string() + ": missing 'mic_index,x,y,z' header");
  std::vector<std::pair<long long, std::vector<double>>> rows;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    const auto f = detail::split(line, ',');
    if (f.size() != 4 && f.size() != 7) throw ConfigError(path.string() + ": expected 4 or 7 columns");
    std::vector<double> vals;
    for (std::size_t i = 1; i < f.size(); ++i) vals.push_back(detail::parse_double(f[i]));
    rows.emplace_back(detail::parse_int(f[0]), std::move(vals));
  }
  std::sort(rows.begin(), rows.end());
  ArrayGeometry geom;
  const bool oriented = !rows.empty() && rows.front().second.size() == 6;
  if (oriented) geom.mic_orientations.emplace();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [idx, v] = rows[i];
    if (idx != static_cast<long long>(i)) throw ConfigError(path.string() + ": mic indices must be 0..M-1");
    if ((v.size() == 6) != oriented) throw ConfigError(path.string() + ": mixed orientation columns");
    geom.mic_positions.push_back({v[0], v[1], v[2]});
    if (oriented) geom.mic_orientations->push_back({v[3], v[4], v[5]});
  }
  geom.validate();
  return geom;
}

void save_geometry(const ArrayGeometry& geom, const std::filesystem::path& path) {
  auto out = detail::open_output(path.string());
  using detail::format_number;
  out << (geom.mic_orientations ? "mic_index,x,y,z,ox,oy,oz\n" : "mic_index,x,y,z\n");
  for (std::size_t m = 0; m < geom.size(); ++m) {
    const auto& p = geom.mic_positions[m];
    out << m << ',' << format_number(p.x) << ',' << format_number(p.y) << ',' << format_number(p.z);
    if (geom.mic_orientations) {
      const auto& o = (*geom.mic_orientations)[m];
      out << ',' << format_number(o.x) << ',' << format_number(o.y) << ',' << format_number(o.z);
    }
    out << '\n';
  }
}

bool SteeringVector::is_null() const {
  return std::all_of(values.begin(), values.end(), [](const Complex& v) { return v == Complex{}; });
}

SteeringVector steer_far_field(const ArrayGeometry& geom, const Vec3& point, double freq_hz) {
  SteeringVector d{ComplexVector(geom.size()), freq_hz, point};
  const double k = kTwoPi * freq_hz / geom.speed_of_sound;
  for (std::size_t m = 0; m < geom.size(); ++m)
    d.values[m] = std::polar(1.0, -k * distance(point, geom.mic_positions[m]));
  return d;
}

SteeringVector steer_near_field(const ArrayGeometry& geom, const Vec3& point, double freq_hz,
                                double r_min) {
  if (!(r_min > 0.0)) throw ConfigError("near-field r_min must be positive");
  SteeringVector d{ComplexVector(geom.size()), freq_hz, point};
  const double k = kTwoPi * freq_hz / geom.speed_of_sound;
  for (std::size_t m = 0; m < geom.size(); ++m) {
    const double r = std::max(distance(point, geom.mic_positions[m]), r_min);
    d.values[m] = std::polar(1.0 / (kFourPi * r), -k * r);
  }
  return d;
}

double cardioid_gain(const Vec3& mic_orientation, const Vec3& direction_to_source) {
  const double denom = mic_orientation.norm() * direction_to_source.norm();
  if (denom == 0.0) return 1.0;
  const double cosang = std::clamp(mic_orientation.dot(direction_to_source) / denom, -1.0, 1.0);
  return 0.5 * (1.0 + cosang);
}

std::vector<double> cardioid_gains(const ArrayGeometry& geom, const Vec3& point) {
  if (!geom.mic_orientations) throw ConfigError("cardioid directivity needs mic orientations");
  std::vector<double> g(geom.size());
  for (std::size_t m = 0; m < geom.size(); ++m)
    g[m] = cardioid_gain((*geom.mic_orientations)[m], point - geom.mic_positions[m]);
  return g;
}

SteeringVector compose_directivity(const SteeringVector& d, std::span<const double> gains) {
  if (gains.size() != d.values.size()) throw DimensionMismatch("directivity gain count mismatch");
  SteeringVector out = d;
  for (std::size_t m = 0; m < gains.size(); ++m) {
    if (gains[m] < 0.0) throw ConfigError("directivity gains must be non-negative");
    out.values[m] *= gains[m];
  }
  return out;
}

AtfTable::AtfTable(ArrayGeometry geometry, std::vector<Vec3> points, std::vector<double> frequencies)
    : geometry_(std::move(geometry)),
      points_(std::move(points)),
      frequencies_(std::move(frequencies)),
      gains_(points_.size() * frequencies_.size() * geometry_.size()) {
  if (geometry_.size() < 2) throw ConfigError("ATF table needs at least two microphones");
  if (points_.empty() || frequencies_.empty()) throw ConfigError("ATF table is empty");
}

std::span<const Complex> AtfTable::gains(std::size_t point, std::size_t bin) const {
  return {gains_.data() + (point * frequencies_.size() + bin) * num_mics(), num_mics()};
}

std::span<Complex> AtfTable::gains(std::size_t point, std::size_t bin) {
  return {gains_.data() + (point * frequencies_.size() + bin) * num_mics(), num_mics()};
}

std::optional<std::size_t> AtfTable::find_bin(double freq_hz) const {
  for (std::size_t b = 0; b < frequencies_.size(); ++b)
    if (std::abs(frequencies_[b] - freq_hz) <= 1e-6) return b;
  return std::nullopt;
}

AtfTable load_atf_table(const std::filesystem::path& table_csv,
                        const std::filesystem::path& geometry_csv) {
  ArrayGeometry geom = load_geometry(geometry_csv);
  auto in = detail::open_input(table_csv.string());
  std::string line;
  std::getline(in, line);
  if (detail::trim(line) != "point_index,x,y,z,freq_hz,mic_index,re,im")
    throw ConfigError(table_csv.string() + ": unexpected header");

  struct Row {
    long long point;
    Vec3 pos;
    double freq;
    long long mic;
    Complex value;
  };
  std::vector<Row> rows;
  std::map<long long, Vec3> points;
  std::vector<double> freqs;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    const auto f = detail::split(line, ',');
    if (f.size() != 8) throw ConfigError(table_csv.string() + ": expected 8 columns");
    Row r{detail::parse_int(f[0]),
          {detail::parse_double(f[1]), detail::parse_double(f[2]), detail::parse_double(f[3])},
          detail::parse_double(f[4]),
          detail::parse_int(f[5]),
          {detail::parse_double(f[6]), detail::parse_double(f[7])}};
    if (r.mic < 0 || r.mic >= static_cast<long long>(geom.size()))
      throw ConfigError(table_csv.string() + ": mic index out of range");
    auto [it, inserted] = points.emplace(r.point, r.pos);
    if (!inserted && !(it->second == r.pos))
      throw ConfigError(table_csv.string() + ": inconsistent coordinates for point " +
                        std::to_string(r.point));
    if (std::none_of(freqs.begin(), freqs.end(), [&](double f0) { return std::abs(f0 - r.freq) <= 1e-6; }))
      freqs.push_back(r.freq);
    rows.push_back(r);
  }
  std::sort(freqs.begin(), freqs.end());
  std::vector<Vec3> pts;
  for (const auto& [idx, p] : points) {
    if (idx != static_cast<long long>(pts.size()))
      throw ConfigError(table_csv.string() + ": point indices must be 0..P-1");
    pts.push_back(p);
  }
  AtfTable table(std::move(geom), std::move(pts), std::move(freqs));
  std::vector<char> seen(table.points().size() * table.frequencies().size() * table.num_mics(), 0);
  for (const auto& r : rows) {
    const std::size_t b = *table.find_bin(r.freq);
    const std::size_t slot = (static_cast<std::size_t>(r.point) * table.frequencies().size() + b) *
                                 table.num_mics() + static_cast<std::size_t>(r.mic);
    if (seen[slot]) throw ConfigError(table_csv.string() + ": duplicate (point, bin, mic) row");
    seen[slot] = 1;
    table.gains(static_cast<std::size_t>(r.point), b)[static_cast<std::size_t>(r.mic)] = r.value;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw ConfigError(table_csv.string() + ": incomplete table, missing (point, bin, mic) rows");
  return table;
}

void save_atf_table(const AtfTable& table, const std::filesystem::path& table_csv,
                    const std::filesystem::path& geometry_csv) {
  save_geometry(table.geometry(), geometry_csv);
  auto out = detail::open_output(table_csv.string());
  using detail::format_number;
  out << "point_index,x,y,z,freq_hz,mic_index,re,im\n";
  char buf[128];
  for (std::size_t p = 0; p < table.points().size(); ++p) {
    const auto& pt = table.points()[p];
    for (std::size_t b = 0; b < table.frequencies().size(); ++b) {
      const auto g = table.gains(p, b);
      for (std::size_t m = 0; m < table.num_mics(); ++m) {
        // Frequencies and gains at full precision: a save/load cycle is exact.
        out << p << ',' << format_number(pt.x) << ',' << format_number(pt.y) << ','
            << format_number(pt.z);
        std::snprintf(buf, sizeof buf, ",%.17g,%zu,%.17g,%.17g\n", table.frequencies()[b], m,
                      g[m].real(), g[m].imag());
        out << buf;
      }
    }
  }
}

SteeringVector steer_from_table(const AtfTable& table, std::size_t point_index, std::size_t bin) {
  if (point_index >= table.points().size())
    throw ConfigError("ATF table has no point " + std::to_string(point_index));
  if (bin >= table.frequencies().size()) throw ConfigError("ATF table has no bin " + std::to_string(bin));
  const auto g = table.gains(point_index, bin);
  return {ComplexVector(g.begin(), g.end()), table.frequencies()[bin], table.points()[point_index]};
}

FreeFieldModel::FreeFieldModel(ArrayGeometry geometry, PropagationKind kind, double r_min,
                               bool cardioid_directivity)
    : geometry_(std::move(geometry)), kind_(kind), r_min_(r_min), directivity_(cardioid_directivity) {
  geometry_.validate();
  if (!(r_min_ > 0.0)) throw ConfigError("near-field r_min must be positive");
  if (directivity_ && !geometry_.mic_orientations)
    throw ConfigError("directivity model requires mic orientations");
}

ComplexVector FreeFieldModel::steer(const Vec3& point, std::size_t, double freq_hz) const {
  SteeringVector d = kind_ == PropagationKind::far_field
                         ? steer_far_field(geometry_, point, freq_hz)
                         : steer_near_field(geometry_, point, freq_hz, r_min_);
  if (directivity_) d = compose_directivity(d, cardioid_gains(geometry_, point));
  return std::move(d.values);
}

TableModel::TableModel(std::shared_ptr<const AtfTable> table) : table_(std::move(table)) {}

ComplexVector TableModel::steer(const Vec3&, std::size_t point_index, double freq_hz) const {
  const auto bin = table_->find_bin(freq_hz);
  if (!bin) throw ConfigError("ATF table has no bin at " + detail::format_number(freq_hz) + " Hz");
  return steer_from_table(*table_, point_index, *bin).values;
}

ScaledModel::ScaledModel(std::shared_ptr<const AcousticModel> base, ScaleFn scale)
    : base_(std::move(base)), scale_(std::move(scale)) {}

ComplexVector ScaledModel::steer(const Vec3& point, std::size_t point_index, double freq_hz) const {
  auto d = base_->steer(point, point_index, freq_hz);
  const Complex s = scale_(freq_hz, point_index);
  for (auto& v : d) v *= s;
  return d;
}

}  // namespace gsrp
