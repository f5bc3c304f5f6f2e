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

#include "gsrp/weighting.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace gsrp {

namespace {

constexpr std::array<std::pair<WeightingKind, std::string_view>, 5> kNames{{
    {WeightingKind::none, "none"},
    {WeightingKind::phat, "phat"},
    {WeightingKind::snr, "snr"},
    {WeightingKind::flat, "flat"},
    {WeightingKind::frob, "frob"},
}};

}  // namespace

std::string_view to_string(WeightingKind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "?";
}

WeightingKind parse_weighting(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  throw ConfigError("unknown weighting '" + std::string(name) + "'");
}

bool weighting_needs_noise_covariance(WeightingKind kind) { return kind == WeightingKind::flat; }

void FrequencyBand::validate(double nyquist_hz) const {
  if (!(lo_hz >= 0.0 && lo_hz < hi_hz && hi_hz <= nyquist_hz))
    throw ConfigError("frequency band must satisfy 0 <= lo < hi <= Nyquist");
}

HermitianMatrix phat_transform(const HermitianMatrix& scm, double floor) {
  if (floor <= 0.0) {
    double peak = 0.0;
    for (const auto& v : scm.entries()) peak = std::max(peak, std::abs(v));
    floor = 1e-12 * peak;
    if (floor == 0.0) return scm;  // zero matrix stays zero
  }
  HermitianMatrix out(scm.dim());
  for (std::size_t r = 0; r < scm.dim(); ++r)
    for (std::size_t c = r; c < scm.dim(); ++c) {
      const Complex v = scm(r, c);
      out.set(r, c, v / std::max(std::abs(v), floor));
    }
  return out;
}

double zeta2_snr(std::size_t num_mics) {
  if (num_mics == 0) throw ConfigError("zeta2_snr needs at least one microphone");
  return 1.0 / static_cast<double>(num_mics);
}

double zeta2_flat(const HermitianMatrix& ncm_inv, const HermitianMatrix& scm) {
  const double t = trace_of_product(ncm_inv, scm) - static_cast<double>(scm.dim()) + 1.0;
  return 1.0 / std::max(t, 1.0);
}

double zeta2_frob(double sigma_v2, const HermitianMatrix& scm) {
  return sigma_v2 / std::max(frobenius_norm(scm), 1e-300);
}

std::vector<double> band_mask(std::span<const double> bin_frequencies, const FrequencyBand& band) {
  std::vector<double> mask(bin_frequencies.size());
  for (std::size_t k = 0; k < mask.size(); ++k)
    mask[k] = (bin_frequencies[k] >= band.lo_hz && bin_frequencies[k] <= band.hi_hz) ? 1.0 : 0.0;
  return mask;
}

}  // namespace gsrp
