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

#include "fft.hpp"

#include <algorithm>
#include <mutex>
#include <new>

namespace gsrp::detail {

namespace {
// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

RealFft::RealFft(std::size_t size) : size_(size) {
  if (size == 0) throw std::invalid_argument("FFT size must be positive");
  std::lock_guard lock(planner_mutex());
  real_ = fftw_alloc_real(size_);
  spec_ = fftw_alloc_complex(num_bins());
  if (real_ == nullptr || spec_ == nullptr) throw std::bad_alloc();
  const int n = static_cast<int>(size_);
  forward_plan_ = fftw_plan_dft_r2c_1d(n, real_, spec_, FFTW_ESTIMATE);
  inverse_plan_ = fftw_plan_dft_c2r_1d(n, spec_, real_, FFTW_ESTIMATE);
}

RealFft::~RealFft() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(forward_plan_);
  fftw_destroy_plan(inverse_plan_);
  fftw_free(real_);
  fftw_free(spec_);
}

void RealFft::forward(std::span<const double> input, std::span<Complex> output) {
  std::copy(input.begin(), input.end(), real_);
  fftw_execute_dft_r2c(forward_plan_, real_, spec_);
  for (std::size_t k = 0; k < num_bins(); ++k) output[k] = {spec_[k][0], spec_[k][1]};
}

void RealFft::inverse(std::span<const Complex> input, std::span<double> output) {
  for (std::size_t k = 0; k < num_bins(); ++k) {
    spec_[k][0] = input[k].real();
    spec_[k][1] = input[k].imag();
  }
  fftw_execute_dft_c2r(inverse_plan_, spec_, real_);
  std::copy(real_, real_ + size_, output.begin());
}

}  // namespace gsrp::detail
