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

#include "gsrp/numerics.hpp"
#include "gsrp/stft.hpp"

namespace gsrp {

enum class CovarianceKind { scm, ncm };

// One Hermitian matrix per STFT bin.
struct CovarianceSpectrum {
  CovarianceKind kind = CovarianceKind::scm;
  std::vector<HermitianMatrix> bins;

  std::size_t num_bins() const { return bins.size(); }
  std::size_t dim() const { return bins.empty() ? 0 : bins.front().dim(); }
};

struct SmoothingParams {
  double alpha = 0.2;   // weight of the newest instantaneous estimate
  double tau_s = 0.075; // informational; alpha is what the recursion uses

  void validate() const;
};

HermitianMatrix instantaneous_scm(std::span<const Complex> y);

// Mean of y y^H over frames [first, last).
CovarianceSpectrum estimate_ncm(const MultichannelStft& tiles, std::size_t first, std::size_t last);

// (1 - alpha)·prev + alpha·y y^H
HermitianMatrix smooth_scm(const HermitianMatrix& prev, std::span<const Complex> y, double alpha);

// ncm + eps_reg·sigma_y2·I
HermitianMatrix regularize_ncm(const HermitianMatrix& ncm, double sigma_y2, double eps_reg);

// Average microphone power tr(m)/M.
double average_power(const HermitianMatrix& m);

// Frame-recursive SCM estimate for a set of bins. The first update() seeds
// each bin with its instantaneous SCM; later calls apply smooth_scm().
class RecursiveScm {
 public:
  RecursiveScm(std::size_t num_bins, std::size_t dim, double alpha);

  void update(const MultichannelStft& tiles, std::size_t frame);
  void update(const MultichannelStft& tiles, std::size_t frame, std::span<const std::size_t> bins);

  bool initialized() const { return initialized_; }
  const std::vector<HermitianMatrix>& bins() const { return bins_; }

 private:
  void update_bin(const MultichannelStft& tiles, std::size_t frame, std::size_t bin);

  double alpha_;
  bool initialized_ = false;
  std::vector<HermitianMatrix> bins_;
};

}  // namespace gsrp
