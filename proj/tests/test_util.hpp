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

// Shared helpers for the unit tests.

#include <Eigen/Dense>
#include <random>

#include "gsrp/numerics.hpp"

namespace gsrp::test {

using Rng = std::mt19937_64;

inline ComplexVector random_vector(std::size_t m, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector v(m);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

inline HermitianMatrix random_pd(std::size_t m, Rng& rng) {
  HermitianMatrix a(m);
  for (std::size_t j = 0; j < m; ++j) a += outer_product(random_vector(m, rng));
  return a.plus_identity(0.1);
}

inline Eigen::MatrixXcd to_eigen(const HermitianMatrix& a) {
  Eigen::MatrixXcd e(a.dim(), a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) e(r, c) = a(r, c);
  return e;
}

inline Eigen::VectorXcd to_eigen(std::span<const Complex> v) {
  Eigen::VectorXcd e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e(i) = v[i];
  return e;
}

// Fixed 3x3 statistics shared with tests/oracles/frozen_values.py.
inline HermitianMatrix fixed_ncm() {
  ComplexMatrix m(3, 3);
  m(0, 0) = 2.0;
  m(0, 1) = {0.3, 0.4};
  m(0, 2) = {0.0, -0.1};
  m(1, 1) = 1.5;
  m(1, 2) = 0.2;
  m(2, 2) = 1.2;
  return HermitianMatrix::from_upper(m);
}

inline ComplexVector fixed_source() { return {{1.0, 0.0}, {0.5, -0.5}, {-0.3, 0.8}}; }
inline ComplexVector fixed_steering() { return {{0.9, 0.0}, {0.4, -0.6}, {-0.2, 0.7}}; }
inline HermitianMatrix fixed_scm() { return fixed_ncm() + outer_product(fixed_source()) * 3.0; }

}  // namespace gsrp::test
