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

#include "gsrp/covariance.hpp"

#include <numeric>

namespace gsrp {

void SmoothingParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ConfigError("smoothing alpha must lie in (0, 1]");
}

HermitianMatrix instantaneous_scm(std::span<const Complex> y) { return outer_product(y); }

CovarianceSpectrum estimate_ncm(const MultichannelStft& tiles, std::size_t first, std::size_t last) {
  if (first >= last || last > tiles.num_frames())
    throw ConfigError("noise frame range is empty or out of bounds");
  CovarianceSpectrum out;
  out.kind = CovarianceKind::ncm;
  out.bins.assign(tiles.num_bins(), HermitianMatrix(tiles.num_channels()));
  const double scale = 1.0 / static_cast<double>(last - first);
  for (std::size_t k = 0; k < tiles.num_bins(); ++k) {
    const std::size_t m = tiles.num_channels();
    std::vector<Complex> acc(m * m);
    for (std::size_t l = first; l < last; ++l) {
      const auto y = tiles.vector(l, k);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = r; c < m; ++c) acc[r * m + c] += y[r] * std::conj(y[c]);
    }
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = r; c < m; ++c) out.bins[k].set(r, c, acc[r * m + c] * scale);
  }
  return out;
}

HermitianMatrix smooth_scm(const HermitianMatrix& prev, std::span<const Complex> y, double alpha) {
  if (prev.dim() != y.size()) throw DimensionMismatch("smoothing dimension mismatch");
  HermitianMatrix out(prev.dim());
  for (std::size_t r = 0; r < prev.dim(); ++r)
    for (std::size_t c = r; c < prev.dim(); ++c)
      out.set(r, c, (1.0 - alpha) * prev(r, c) + alpha * y[r] * std::conj(y[c]));
  return out;
}

HermitianMatrix regularize_ncm(const HermitianMatrix& ncm, double sigma_y2, double eps_reg) {
  if (eps_reg < 0.0 || sigma_y2 < 0.0)
    throw ConfigError("regularization requires eps_reg >= 0 and sigma_y2 >= 0");
  return ncm.plus_identity(eps_reg * sigma_y2);
}

double average_power(const HermitianMatrix& m) {
  return m.dim() == 0 ? 0.0 : trace(m) / static_cast<double>(m.dim());
}

RecursiveScm::RecursiveScm(std::size_t num_bins, std::size_t dim, double alpha)
    : alpha_(alpha), bins_(num_bins, HermitianMatrix(dim)) {}

void RecursiveScm::update(const MultichannelStft& tiles, std::size_t frame) {
  std::vector<std::size_t> all(bins_.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  update(tiles, frame, all);
}

void RecursiveScm::update(const MultichannelStft& tiles, std::size_t frame,
                          std::span<const std::size_t> bins) {
  for (const auto k : bins) update_bin(tiles, frame, k);
  initialized_ = true;
}

void RecursiveScm::update_bin(const MultichannelStft& tiles, std::size_t frame, std::size_t bin) {
  const auto y = tiles.vector(frame, bin);
  bins_[bin] = initialized_ ? smooth_scm(bins_[bin], y, alpha_) : instantaneous_scm(y);
}

}  // namespace gsrp
