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

// Thin RAII wrapper over FFTW real<->complex transforms.

#include <fftw3.h>

#include <span>

#include "gsrp/types.hpp"

namespace gsrp::detail {

class RealFft {
 public:
  explicit RealFft(std::size_t size);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t size() const { return size_; }
  std::size_t num_bins() const { return size_ / 2 + 1; }

  // Unnormalized forward transform, X[k] = sum_n x[n] exp(-j 2 pi k n / N).
  void forward(std::span<const double> input, std::span<Complex> output);
  // Unnormalized inverse; the caller divides by size().
  void inverse(std::span<const Complex> input, std::span<double> output);

 private:
  std::size_t size_;
  double* real_;
  fftw_complex* spec_;
  fftw_plan forward_plan_;
  fftw_plan inverse_plan_;
};

}  // namespace gsrp::detail
