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

#include "gsrp/beamformers.hpp"

#include <array>
#include <string>

namespace gsrp {

namespace {

constexpr std::array<std::pair<BeamformerKind, std::string_view>, 6> kNames{{
    {BeamformerKind::ds, "ds"},
    {BeamformerKind::mvdr, "mvdr"},
    {BeamformerKind::mpdr, "mpdr"},
    {BeamformerKind::mvcnr, "mvcnr"},
    {BeamformerKind::nmf, "nmf"},
    {BeamformerKind::mpcnr, "mpcnr"},
}};

// d^H m d, rejecting non-positive values.
double positive_form(std::span<const Complex> d, const HermitianMatrix& m, const char* what) {
  const double v = hermitian_form(d, m);
  if (!(v > 1e-300)) throw DegenerateSteering(std::string(what) + ": d^H M d is not positive");
  return v;
}

ComplexVector scaled(ComplexVector v, double s) {
  for (auto& x : v) x *= s;
  return v;
}

}  // namespace

std::string_view to_string(BeamformerKind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "?";
}

BeamformerKind parse_beamformer(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  throw ConfigError("unknown beamformer '" + std::string(name) + "'");
}

bool needs_noise_covariance(BeamformerKind kind) {
  return kind == BeamformerKind::mvdr || kind == BeamformerKind::mvcnr || kind == BeamformerKind::mpcnr;
}

bool needs_scm_inverse(BeamformerKind kind) {
  return kind == BeamformerKind::mpdr || kind == BeamformerKind::mpcnr;
}

double output_power(std::span<const Complex> w, const HermitianMatrix& m) {
  return hermitian_form(w, m);
}

double ds_psd(std::span<const Complex> d, const HermitianMatrix& scm) { return hermitian_form(d, scm); }

ComplexVector mvdr_weights(std::span<const Complex> d, const HermitianMatrix& ncm_inv) {
  const double denom = positive_form(d, ncm_inv, "mvdr");
  return scaled(ncm_inv * d, 1.0 / denom);
}

double mvdr_psd(std::span<const Complex> d, const HermitianMatrix& scm, const HermitianMatrix& ncm_inv) {
  return output_power(mvdr_weights(d, ncm_inv), scm);
}

double mpdr_psd(std::span<const Complex> d, const HermitianMatrix& scm, const HermitianMatrix& scm_inv) {
  if (scm.dim() != scm_inv.dim()) throw DimensionMismatch("mpdr dimension mismatch");
  return 1.0 / positive_form(d, scm_inv, "mpdr");
}

ComplexVector mvcnr_weights(std::span<const Complex> d, const HermitianMatrix& ncm_inv, double zeta) {
  const double denom = positive_form(d, ncm_inv, "mvcnr");
  return scaled(ncm_inv * d, zeta / std::sqrt(denom));
}

double mvcnr_psd(std::span<const Complex> d, const HermitianMatrix& scm, const HermitianMatrix& ncm_inv,
                 double zeta) {
  const double denom = positive_form(d, ncm_inv, "mvcnr");
  const ComplexVector u = ncm_inv * d;
  return zeta * zeta * hermitian_form(u, scm) / denom;
}

ComplexVector nmf_weights(std::span<const Complex> d, double sigma_v2, double zeta) {
  if (!(sigma_v2 > 0.0)) throw ConfigError("nmf requires a positive noise power");
  const double n2 = squared_norm(d);
  if (!(n2 > 0.0)) throw DegenerateSteering("nmf: zero steering vector");
  return scaled(ComplexVector(d.begin(), d.end()), zeta / std::sqrt(sigma_v2 * n2));
}

double nmf_psd(std::span<const Complex> d, const HermitianMatrix& scm, double sigma_v2, double zeta) {
  if (!(sigma_v2 > 0.0)) throw ConfigError("nmf requires a positive noise power");
  const double n2 = squared_norm(d);
  if (!(n2 > 0.0)) throw DegenerateSteering("nmf: zero steering vector");
  return zeta * zeta / sigma_v2 * hermitian_form(d, scm) / n2;
}

ComplexVector mpcnr_weights(std::span<const Complex> d, const HermitianMatrix& scm_inv,
                            const HermitianMatrix& ncm_inv, double zeta) {
  const double noise_term = positive_form(d, ncm_inv, "mpcnr");
  const double power_term = positive_form(d, scm_inv, "mpcnr");
  return scaled(scm_inv * d, zeta * std::sqrt(noise_term) / power_term);
}

double mpcnr_psd(std::span<const Complex> d, const HermitianMatrix& scm_inv, const HermitianMatrix& ncm_inv,
                 const HermitianMatrix& scm, double zeta) {
  if (scm.dim() != scm_inv.dim()) throw DimensionMismatch("mpcnr dimension mismatch");
  return zeta * zeta * positive_form(d, ncm_inv, "mpcnr") / positive_form(d, scm_inv, "mpcnr");
}

bool criterion1_check(const HermitianMatrix& a, std::span<const Complex> h_s,
                      std::span<const ComplexVector> candidates, double zeta) {
  const auto weights = [&](std::span<const Complex> h) {
    const double n = positive_form(h, a, "criterion1");
    return scaled(a * h, zeta / std::sqrt(n));
  };
  const double at_source = std::abs(inner_product(weights(h_s), h_s));
  for (const auto& h : candidates) {
    const double other = std::abs(inner_product(weights(h), h_s));
    if (other > at_source * (1.0 + 1e-12)) return false;
  }
  return true;
}

BinBeamformer::BinBeamformer(BeamformerKind kind, const Inputs& in) : kind_(kind), sigma_v2_(in.sigma_v2) {
  if (in.scm == nullptr) throw ConfigError("beamformer needs an SCM");
  const auto need = [](const HermitianMatrix* m, const char* what) -> const HermitianMatrix& {
    if (m == nullptr) throw ConfigError(std::string("beamformer needs ") + what);
    return *m;
  };
  switch (kind) {
    case BeamformerKind::ds:
    case BeamformerKind::nmf:
      primary_ = *in.scm;
      if (kind == BeamformerKind::nmf && !(sigma_v2_ > 0.0))
        throw ConfigError("nmf requires a positive noise power");
      break;
    case BeamformerKind::mvdr:
    case BeamformerKind::mvcnr: {
      const auto& inv = need(in.ncm_inv, "an inverse NCM");
      primary_ = sandwich(inv, *in.scm);
      secondary_ = inv;
      break;
    }
    case BeamformerKind::mpdr:
      primary_ = need(in.scm_inv, "an inverse SCM");
      break;
    case BeamformerKind::mpcnr:
      primary_ = need(in.scm_inv, "an inverse SCM");
      secondary_ = need(in.ncm_inv, "an inverse NCM");
      break;
  }
}

double BinBeamformer::unit_psd(std::span<const Complex> d) const {
  switch (kind_) {
    case BeamformerKind::ds:
      return hermitian_form(d, primary_);
    case BeamformerKind::nmf:
      return hermitian_form(d, primary_) / (sigma_v2_ * squared_norm(d));
    case BeamformerKind::mvdr: {
      const double n = positive_form(d, secondary_, "mvdr");
      return hermitian_form(d, primary_) / (n * n);
    }
    case BeamformerKind::mvcnr:
      return hermitian_form(d, primary_) / positive_form(d, secondary_, "mvcnr");
    case BeamformerKind::mpdr:
      return 1.0 / positive_form(d, primary_, "mpdr");
    case BeamformerKind::mpcnr:
      return positive_form(d, secondary_, "mpcnr") / positive_form(d, primary_, "mpcnr");
  }
  return 0.0;
}

}  // namespace gsrp
