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

#include <span>
#include <string_view>

#include "gsrp/numerics.hpp"

namespace gsrp {

// none: zeta^2 = 1. phat: element-wise SCM normalization (DS only).
// snr, flat, frob: scalar frequency weights zeta^2.
enum class WeightingKind { none, phat, snr, flat, frob };

std::string_view to_string(WeightingKind kind);
WeightingKind parse_weighting(std::string_view name);  // throws ConfigError

bool weighting_needs_noise_covariance(WeightingKind kind);

struct FrequencyBand {
  double lo_hz = 100.0;
  double hi_hz = 8000.0;

  // Throws unless lo < hi <= nyquist.
  void validate(double nyquist_hz) const;
};

// Divides each element by max(|element|, floor). floor <= 0 selects
// 1e-12 times the largest element magnitude.
HermitianMatrix phat_transform(const HermitianMatrix& scm, double floor = 0.0);

double zeta2_snr(std::size_t num_mics);

// 1 / (tr(Phi_vv^-1 Phi_yy) - M + 1), denominator clamped below at 1.
double zeta2_flat(const HermitianMatrix& ncm_inv, const HermitianMatrix& scm);

// sigma_v^2 / ||Phi_yy||_F
double zeta2_frob(double sigma_v2, const HermitianMatrix& scm);

// 1 inside [lo, hi] (both ends inclusive), 0 outside.
std::vector<double> band_mask(std::span<const double> bin_frequencies, const FrequencyBand& band);

}  // namespace gsrp
