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

// Small dense complex linear algebra. Matrices here are at most a few dozen
// rows, so everything is direct and unpivoted.

#include <span>

#include "gsrp/types.hpp"

namespace gsrp {

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexVector operator*(std::span<const Complex> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// Hermitian matrix with dense storage. Every write goes through set(), which
// mirrors the conjugate into the other triangle, so the invariant holds by
// construction. Diagonal entries are kept real.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(std::size_t dim);

  static HermitianMatrix identity(std::size_t dim);
  static HermitianMatrix diagonal(std::span<const double> diag);
  // Builds from the upper triangle of m (lower triangle ignored).
  static HermitianMatrix from_upper(const ComplexMatrix& m);

  std::size_t dim() const { return dim_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  void set(std::size_t r, std::size_t c, Complex v);
  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix to_matrix() const;

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator*(double s) const;
  HermitianMatrix& operator+=(const HermitianMatrix& o);
  HermitianMatrix& operator*=(double s);
  // this + s·I
  HermitianMatrix plus_identity(double s) const;

  ComplexVector operator*(std::span<const Complex> v) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

// Raised by cholesky() when a pivot is not strictly positive.
class NotPositiveDefinite : public NumericalError {
 public:
  explicit NotPositiveDefinite(std::size_t pivot);
  std::size_t pivot() const { return pivot_; }

 private:
  std::size_t pivot_;
};

// Lower-triangular L with L·L^H = m.
ComplexMatrix cholesky(const HermitianMatrix& m);

HermitianMatrix hermitian_inverse(const HermitianMatrix& m);

// a^H m b
Complex quadratic_form(std::span<const Complex> a, const HermitianMatrix& m,
                       std::span<const Complex> b);

// a^H m a, real by Hermitian symmetry. Reads only the upper triangle.
double hermitian_form(std::span<const Complex> a, const HermitianMatrix& m);

// outer·inner·outer, Hermitian whenever both arguments are.
HermitianMatrix sandwich(const HermitianMatrix& outer, const HermitianMatrix& inner);

HermitianMatrix outer_product(std::span<const Complex> v);

double frobenius_norm(const ComplexMatrix& m);
double frobenius_norm(const HermitianMatrix& m);
double trace(const HermitianMatrix& m);
// tr(a·b) for Hermitian a, b; real.
double trace_of_product(const HermitianMatrix& a, const HermitianMatrix& b);

double squared_norm(std::span<const Complex> v);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);  // a^H b

}  // namespace gsrp
