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

// Narrowband beamformers for steered response power.
//
// Baselines: delay-and-sum (DS), MVDR and MPDR. Constant-noise-response
// beamformers: MVCNR, its white-noise simplification NMF, and the minimum
// power variant MPCNR. All *_psd functions return the beamformer output power
// w^H Phi_yy w for steering vector d; zeta scales the weights so the result
// carries a factor zeta^2. The grid search passes zeta = 1 and applies the
// frequency weight outside.

#include <optional>
#include <span>
#include <string_view>

#include "gsrp/numerics.hpp"

namespace gsrp {

enum class BeamformerKind { ds, mvdr, mpdr, mvcnr, nmf, mpcnr };

std::string_view to_string(BeamformerKind kind);
BeamformerKind parse_beamformer(std::string_view name);  // throws ConfigError

// NMF only needs a scalar noise power and falls back to 1 without an NCM.
bool needs_noise_covariance(BeamformerKind kind);
bool needs_scm_inverse(BeamformerKind kind);

// Steering vector for which the beamformer normalization is undefined.
class DegenerateSteering : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// w^H m w
double output_power(std::span<const Complex> w, const HermitianMatrix& m);

double ds_psd(std::span<const Complex> d, const HermitianMatrix& scm);

// w = Phi_vv^-1 d / (d^H Phi_vv^-1 d)
ComplexVector mvdr_weights(std::span<const Complex> d, const HermitianMatrix& ncm_inv);
double mvdr_psd(std::span<const Complex> d, const HermitianMatrix& scm, const HermitianMatrix& ncm_inv);

// 1 / (d^H Phi_yy^-1 d)
double mpdr_psd(std::span<const Complex> d, const HermitianMatrix& scm, const HermitianMatrix& scm_inv);

// zeta Phi_vv^-1 d / sqrt(d^H Phi_vv^-1 d). Its noise response is zeta^2 for
// every d, and w^H d = zeta sqrt(d^H Phi_vv^-1 d).
ComplexVector mvcnr_weights(std::span<const Complex> d, const HermitianMatrix& ncm_inv, double zeta = 1.0);
// zeta^2 (d^H Phi_vv^-1 Phi_yy Phi_vv^-1 d) / (d^H Phi_vv^-1 d)
double mvcnr_psd(std::span<const Complex> d, const HermitianMatrix& scm, const HermitianMatrix& ncm_inv,
                 double zeta = 1.0);

// (zeta / sigma_v) d / ||d||
ComplexVector nmf_weights(std::span<const Complex> d, double sigma_v2, double zeta = 1.0);
double nmf_psd(std::span<const Complex> d, const HermitianMatrix& scm, double sigma_v2, double zeta = 1.0);

// zeta sqrt(d^H Phi_vv^-1 d) Phi_yy^-1 d / (d^H Phi_yy^-1 d)
ComplexVector mpcnr_weights(std::span<const Complex> d, const HermitianMatrix& scm_inv,
                            const HermitianMatrix& ncm_inv, double zeta = 1.0);
// zeta^2 (d^H Phi_vv^-1 d) / (d^H Phi_yy^-1 d)
double mpcnr_psd(std::span<const Complex> d, const HermitianMatrix& scm_inv, const HermitianMatrix& ncm_inv,
                 const HermitianMatrix& scm, double zeta = 1.0);

// Checks the maximum-source-response property of w(p) = alpha(p) A h(p) with
// alpha(p) = zeta / sqrt(h(p)^H A h(p)): |w(p_s)^H h_s| >= |w(p)^H h_s| for
// every candidate h(p), with 1e-12 relative slack.
bool criterion1_check(const HermitianMatrix& a, std::span<const Complex> h_s,
                      std::span<const ComplexVector> candidates, double zeta = 1.0);

// Per-bin precomputation for evaluating one beamformer over many steering
// vectors. Matrices are copied in; the object is immutable afterwards and may
// be shared across threads.
class BinBeamformer {
 public:
  struct Inputs {
    const HermitianMatrix* scm = nullptr;      // required
    const HermitianMatrix* ncm_inv = nullptr;  // mvdr, mvcnr, mpcnr
    const HermitianMatrix* scm_inv = nullptr;  // mpdr, mpcnr
    double sigma_v2 = 1.0;                     // nmf
  };

  BinBeamformer(BeamformerKind kind, const Inputs& in);

  // Output PSD at zeta = 1. d must not be the zero vector.
  double unit_psd(std::span<const Complex> d) const;

 private:
  BeamformerKind kind_;
  HermitianMatrix primary_;    // scm (ds, nmf), Phi_vv^-1 Phi_yy Phi_vv^-1 (mvdr, mvcnr), Phi_yy^-1 (mpdr)
  HermitianMatrix secondary_;  // Phi_vv^-1 (mvdr, mvcnr, mpcnr); Phi_yy^-1 for mpcnr lives in primary_
  double sigma_v2_ = 1.0;
};

}  // namespace gsrp
